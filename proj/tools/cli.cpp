#include "cli.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "degen/degenerate.hpp"
#include "degen/identities.hpp"
#include "degen/padic.hpp"

namespace degen::cli {

namespace {

enum class Format { plain, json, latex };

Format parse_format(const std::string& s) {
  if (s == "plain") return Format::plain;
  if (s == "json") return Format::json;
  if (s == "latex") return Format::latex;
  throw std::invalid_argument("unknown format '" + s + "'");
}

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct EulerArgs {
  unsigned order = 1;
  unsigned max = 5;
  bool numbers = false;
  bool classical = false;
  std::string method = "recurrence";
};

struct StirlingArgs {
  unsigned max = 6;
};

struct AltSumArgs {
  unsigned max = 4;
  std::string n = "0..4";
  bool classical = false;
};

struct VerifyArgs {
  std::string identity;
  bool all = false;
  std::string w1, w2, n, m;
  int order = -1;
  bool allow_even = false;
};

struct PadicArgs {
  std::string check;
  unsigned p = 3;
  unsigned level = 1;
  unsigned n = 1;
  unsigned r = 1;
  std::string lambda = "0";
  std::string f;
  int falling = -1;
  std::uint64_t budget = 0;
};

struct KernelArgs {
  unsigned w1 = 1, w2 = 1, m = 1, order = 4;
  bool allow_even = false;
};

// ---- tables ---------------------------------------------------------------

int cmd_euler(const EulerArgs& a, Format fmt, std::ostream& out) {
  EulerMethod method;
  if (a.method == "series")
    method = EulerMethod::series;
  else if (a.method == "recurrence")
    method = EulerMethod::recurrence;
  else
    throw UsageError("unknown method '" + a.method + "'");

  const auto family = euler_numbers(a.order, a.max, method);
  std::vector<MPoly> rows;
  for (unsigned n = 0; n <= a.max; ++n) {
    MPoly v = a.numbers ? family.numbers[n] : euler_poly(a.order, n, MPoly::x());
    rows.push_back(a.classical ? classical_limit(v) : v);
  }

  const std::string ord = std::to_string(a.order);
  switch (fmt) {
    case Format::plain:
      for (unsigned n = 0; n <= a.max; ++n) out << n << '\t' << to_string(rows[n]) << '\n';
      break;
    case Format::json: {
      Json j{{"table", "euler"},
                       {"order", a.order},
                       {"kind", a.numbers ? "numbers" : "polynomials"},
                       {"method", a.method},
                       {"classical", a.classical},
                       {"rows", Json::array()}};
      for (unsigned n = 0; n <= a.max; ++n)
        j["rows"].push_back({{"n", n}, {"value", to_json(rows[n])}, {"text", to_string(rows[n])}});
      out << j.dump() << '\n';
      break;
    }
    case Format::latex: {
      const std::string arg = a.classical ? (a.numbers ? "" : "(x)") : (a.numbers ? "(\\lambda)" : "(x\\mid\\lambda)");
      const std::string sym = a.classical ? "E" : "\\mathcal{E}";
      out << "\\begin{align*}\n";
      for (unsigned n = 0; n <= a.max; ++n)
        out << sym << "_{" << n << "}^{(" << ord << ")}" << arg << " &= " << to_latex(rows[n]) << " \\\\\n";
      out << "\\end{align*}\n";
      break;
    }
  }
  return 0;
}

int cmd_stirling(const StirlingArgs& a, Format fmt, std::ostream& out) {
  switch (fmt) {
    case Format::plain:
      for (unsigned n = 0; n <= a.max; ++n) {
        out << n;
        for (unsigned l = 0; l <= n; ++l) out << '\t' << stirling1(n, l).to_string();
        out << '\n';
      }
      break;
    case Format::json: {
      Json j{{"table", "stirling1"}, {"rows", Json::array()}};
      for (unsigned n = 0; n <= a.max; ++n) {
        auto vals = Json::array();
        for (unsigned l = 0; l <= n; ++l) vals.push_back(stirling1(n, l).to_string());
        j["rows"].push_back({{"n", n}, {"values", vals}});
      }
      out << j.dump() << '\n';
      break;
    }
    case Format::latex:
      out << "\\begin{array}{r|" << std::string(a.max + 1, 'r') << "}\n";
      for (unsigned n = 0; n <= a.max; ++n) {
        out << "S_{1}(" << n << ",\\cdot)";
        for (unsigned l = 0; l <= n; ++l) out << " & " << stirling1(n, l).to_string();
        out << " \\\\\n";
      }
      out << "\\end{array}\n";
      break;
  }
  return 0;
}

int cmd_altsum(const AltSumArgs& a, Format fmt, std::ostream& out) {
  const auto ns = parse_int_list(a.n);
  Json rows = Json::array();
  if (fmt == Format::latex) out << "\\begin{align*}\n";
  for (unsigned n : ns) {
    for (unsigned k = 0; k <= a.max; ++k) {
      MPoly v = alt_sum(k, n);
      if (a.classical) v = classical_limit(v);
      switch (fmt) {
        case Format::plain:
          out << "k=" << k << "\tn=" << n << '\t' << to_string(v) << '\n';
          break;
        case Format::json:
          rows.push_back({{"k", k}, {"n", n}, {"value", to_json(v)}, {"text", to_string(v)}});
          break;
        case Format::latex:
          out << "\\tilde{S}_{" << k << "}(" << n << (a.classical ? "" : "\\mid\\lambda") << ") &= " << to_latex(v)
              << " \\\\\n";
          break;
      }
    }
  }
  if (fmt == Format::json)
    out << Json{{"table", "altsum"}, {"classical", a.classical}, {"rows", rows}}.dump() << '\n';
  if (fmt == Format::latex) out << "\\end{align*}\n";
  return 0;
}

// ---- verify ---------------------------------------------------------------

std::vector<unsigned> distinct(const std::vector<IdentityParams>& grid, unsigned IdentityParams::*field) {
  std::set<unsigned> s;
  for (const auto& p : grid) s.insert(p.*field);
  return {s.begin(), s.end()};
}

std::vector<IdentityParams> build_grid(IdentityId id, const VerifyArgs& a) {
  const auto defaults = default_grid(id);
  auto pick = [&](const std::string& flag, unsigned IdentityParams::*field) {
    return flag.empty() ? distinct(defaults, field) : parse_int_list(flag);
  };
  const auto w1s = pick(a.w1, &IdentityParams::w1);
  const auto w2s = pick(a.w2, &IdentityParams::w2);
  const auto ns = pick(a.n, &IdentityParams::n);
  const auto ms = pick(a.m, &IdentityParams::m);
  const auto orders =
      a.order >= 0 ? std::vector<unsigned>{static_cast<unsigned>(a.order)} : distinct(defaults, &IdentityParams::order);

  std::vector<IdentityParams> grid;
  for (unsigned w1 : w1s)
    for (unsigned w2 : w2s)
      for (unsigned n : ns)
        for (unsigned m : ms)
          for (unsigned order : orders) grid.push_back({id, w1, w2, n, m, order});
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

std::string describe(const IdentityParams& p) {
  std::string s(identity_name(p.id));
  const auto params = params_to_json(p);
  for (const auto& [k, v] : params.items()) s += " " + k + "=" + v.dump();
  return s;
}

void emit_report(const VerificationReport& r, Format fmt, bool show_sides, std::ostream& out) {
  switch (fmt) {
    case Format::json:
      out << to_json(r).dump() << '\n';
      break;
    case Format::plain: {
      const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count();
      out << describe(r.params) << ": " << (r.equal ? "equal" : "FALSIFIED") << " (" << ms << " ms)\n";
      if (show_sides || !r.equal) {
        out << "  lhs: " << side_to_string(r.lhs) << '\n';
        out << "  rhs: " << side_to_string(r.rhs) << '\n';
        out << "  difference: " << side_to_string(r.difference) << '\n';
        for (const auto& sc : r.subchecks)
          out << "  " << sc.name << ": " << (sc.equal ? "equal" : side_to_string(sc.difference)) << '\n';
      }
      break;
    }
    case Format::latex: {
      std::string statement = latex_statement(r.params);
      const auto nl = statement.find("\n= ");
      if (nl != std::string::npos) statement.replace(nl, 3, " \\\\\n&= ");
      out << "% " << describe(r.params) << ": " << (r.equal ? "equal" : "falsified") << '\n';
      out << "\\begin{align*}\n&" << statement << " \\\\\n";
      out << "\\text{LHS} &= " << side_to_latex(r.lhs) << " \\\\\n";
      out << "\\text{RHS} &= " << side_to_latex(r.rhs);
      if (!r.equal) out << " \\\\\n\\text{LHS}-\\text{RHS} &= " << side_to_latex(r.difference);
      out << "\n\\end{align*}\n";
      break;
    }
  }
}

int cmd_verify(const VerifyArgs& a, Format fmt, unsigned jobs, std::ostream& out, std::ostream& err) {
  std::vector<IdentityParams> grid;
  if (a.all) {
    if (!a.identity.empty()) throw UsageError("give either an identity or --all, not both");
    for (IdentityId id : all_identities()) {
      if (id == IdentityId::eq14) continue;  // odd rows of the eq13 grid are reported as eq14
      for (const auto& p : default_grid(id)) grid.push_back(p);
    }
  } else {
    if (a.identity.empty()) throw UsageError("verify needs an identity id or --all");
    const auto id = parse_identity(a.identity);
    if (!id) throw UsageError("unknown identity '" + a.identity + "'");
    grid = build_grid(*id, a);
  }
  const auto reports = verify_grid(grid, jobs, VerifyOptions{a.allow_even});
  std::size_t passed = 0;
  for (const auto& r : reports) {
    emit_report(r, fmt, reports.size() == 1, out);
    if (r.equal) ++passed;
  }
  err << passed << "/" << reports.size() << " identities verified\n";
  return passed == reports.size() ? 0 : 1;
}

// ---- padic ----------------------------------------------------------------

int cmd_padic(const PadicArgs& a, Format fmt, std::ostream& out) {
  PadicOptions opts;
  if (a.budget > 0) opts.budget = a.budget;
  const Rational lambda = Rational::parse(a.lambda);

  Congruence c;
  if (a.check == "eq10") {
    if (!a.f.empty() || a.falling >= 0) throw UsageError("eq10 has a fixed integrand; --f and --falling do not apply");
    c = check_eq10(a.n, a.r, lambda, a.p, a.level, opts);
  } else if (a.check == "eq2" || a.check == "eq3") {
    MPoly f;
    if (!a.f.empty() && a.falling >= 0) throw UsageError("give either --f or --falling, not both");
    if (!a.f.empty())
      f = parse_poly(a.f);
    else if (a.falling >= 0)
      f = falling(MPoly::x(), Rational(1), static_cast<unsigned>(a.falling));
    else
      throw UsageError(a.check + " needs an integrand: --f <poly> or --falling <k>");
    c = a.check == "eq2" ? check_eq2(f, lambda, a.p, a.level, opts) : check_eq3(f, lambda, a.p, a.level, a.n, opts);
  } else {
    throw UsageError("unknown p-adic check '" + a.check + "' (expected eq2, eq3 or eq10)");
  }

  switch (fmt) {
    case Format::json:
      out << to_json(c).dump() << '\n';
      break;
    case Format::plain:
      out << c.check << " p=" << c.p << " N=" << c.level << " r=" << c.variables << " n=" << c.index
          << " lambda=" << c.lambda.to_string() << ": sum " << c.lhs.to_string() << ", target " << c.rhs.to_string()
          << ", valuation " << (c.valuation ? std::to_string(*c.valuation) : std::string("inf")) << " (required "
          << c.required << "): " << (c.verdict ? "pass" : "FAIL") << '\n';
      break;
    case Format::latex:
      out << c.lhs.to_string() << " \\equiv " << c.rhs.to_string() << " \\pmod{" << c.p << "^{" << c.required
          << "}}\\quad" << (c.verdict ? "\\checkmark" : "\\times") << '\n';
      break;
  }
  return c.verdict ? 0 : 1;
}

// ---- kernel ---------------------------------------------------------------

int cmd_kernel(const KernelArgs& a, Format fmt, std::ostream& out) {
  if (!a.allow_even && (a.w1 % 2 == 0 || a.w2 % 2 == 0))
    throw ParityViolation("kernel needs odd w1 and w2 (use --allow-even to override)");
  const TSeries k = build_kernel(a.w1, a.w2, a.m, a.order);
  switch (fmt) {
    case Format::json:
      out << Json{{"w1", a.w1}, {"w2", a.w2}, {"m", a.m}, {"order", a.order}, {"series", to_json(k)},
                            {"text", to_string(k)}}
                 .dump()
          << '\n';
      break;
    case Format::plain:
      for (std::size_t n = 0; n <= k.order(); ++n) out << "t^" << n << '\t' << to_string(k[n]) << '\n';
      break;
    case Format::latex:
      out << "K^{(" << a.m << ")}(" << a.w1 << "," << a.w2 << "\\mid\\lambda) = " << to_latex(k) << '\n';
      break;
  }
  return 0;
}

}  // namespace

std::vector<unsigned> parse_int_list(const std::string& text) {
  std::vector<unsigned> out;
  std::size_t start = 0;
  auto parse_uint = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw UsageError("bad integer '" + s + "' in list '" + text + "'");
    return static_cast<unsigned>(std::stoul(s));
  };
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(parse_uint(item));
    } else {
      const unsigned lo = parse_uint(item.substr(0, dots));
      const unsigned hi = parse_uint(item.substr(dots + 2));
      if (lo > hi) throw UsageError("empty range '" + item + "'");
      for (unsigned v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact degenerate Euler polynomial engine: tables, identity verification, p-adic checks",
               "degen_euler"};
  app.require_subcommand(1);

  std::string format = "plain";
  unsigned jobs = std::max(1U, std::thread::hardware_concurrency());
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"plain", "json", "latex"}));
  };

  EulerArgs ea;
  auto* euler = app.add_subcommand("euler", "Degenerate Euler numbers or polynomials of a given order");
  euler->add_option("--order,-r", ea.order, "Order r (0 gives falling factorials)");
  euler->add_option("--max", ea.max, "Largest index n");
  euler->add_flag("--numbers", ea.numbers, "Emit numbers E_n^(r)(lambda) instead of polynomials");
  euler->add_flag("--classical", ea.classical, "Apply lambda -> 0");
  euler->add_option("--method", ea.method, "series or recurrence")->check(CLI::IsMember({"series", "recurrence"}));
  add_format(euler);

  StirlingArgs sa;
  auto* stirling = app.add_subcommand("stirling", "Signed Stirling numbers of the first kind");
  stirling->add_option("--max", sa.max, "Largest row n");
  add_format(stirling);

  AltSumArgs aa;
  auto* altsum = app.add_subcommand("altsum", "Alternating degenerate power sums");
  altsum->add_option("--max", aa.max, "Largest k");
  altsum->add_option("--n", aa.n, "Values of n (list or range)");
  altsum->add_flag("--classical", aa.classical, "Apply lambda -> 0");
  add_format(altsum);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Verify symmetric identities exactly over Q[x,y,lambda]");
  verify->add_option("identity", va.identity,
                     "thm1 thm2 cor3 thm4 cor5 multformula eq13 eq14 eq17 kernel-sym");
  verify->add_flag("--all", va.all, "Run every default (acceptance) grid");
  verify->add_option("--w1", va.w1, "w1 values");
  verify->add_option("--w2", va.w2, "w2 values");
  verify->add_option("--n", va.n, "n values");
  verify->add_option("--m", va.m, "m values");
  verify->add_option("--order", va.order, "Series truncation order");
  verify->add_flag("--allow-even", va.allow_even, "Permit even parameters (falsification runs)");
  verify->add_option("--jobs,-j", jobs, "Worker threads")->check(CLI::PositiveNumber);
  add_format(verify);

  PadicArgs pa;
  auto* padic = app.add_subcommand("padic", "Fermionic-sum congruence checks");
  padic->add_option("check", pa.check, "eq2, eq3 or eq10")->required();
  padic->add_option("--p", pa.p, "Odd prime");
  padic->add_option("--N", pa.level, "Level N (sum over x < p^N)");
  padic->add_option("--n", pa.n, "Index n (eq10) or shift n (eq3)");
  padic->add_option("--r", pa.r, "Number of variables (eq10)");
  padic->add_option("--lambda", pa.lambda, "Rational lambda a/b");
  padic->add_option("--f", pa.f, "Integrand polynomial in x and L");
  padic->add_option("--falling", pa.falling, "Use (x|lambda)_k as the integrand");
  padic->add_option("--budget", pa.budget, "Maximum naive term count p^(N r)");
  add_format(padic);

  KernelArgs ka;
  auto* kernel = app.add_subcommand("kernel", "Truncated symmetric kernel series");
  kernel->add_option("--w1", ka.w1);
  kernel->add_option("--w2", ka.w2);
  kernel->add_option("--m", ka.m);
  kernel->add_option("--order", ka.order);
  kernel->add_flag("--allow-even", ka.allow_even);
  add_format(kernel);

  std::vector<const char*> argv{"degen_euler"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    const Format fmt = parse_format(format);
    if (euler->parsed()) return cmd_euler(ea, fmt, out);
    if (stirling->parsed()) return cmd_stirling(sa, fmt, out);
    if (altsum->parsed()) return cmd_altsum(aa, fmt, out);
    if (verify->parsed()) return cmd_verify(va, fmt, jobs, out, err);
    if (padic->parsed()) return cmd_padic(pa, fmt, out);
    if (kernel->parsed()) return cmd_kernel(ka, fmt, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << " (estimated terms: " << e.terms().get_str() << ")\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace degen::cli
