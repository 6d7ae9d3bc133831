#include "degen/identities.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <thread>

#include "degen/degenerate.hpp"

namespace degen {

namespace {

constexpr std::array<std::pair<IdentityId, std::string_view>, 10> kNames{{
    {IdentityId::thm1, "thm1"},
    {IdentityId::thm2, "thm2"},
    {IdentityId::cor3, "cor3"},
    {IdentityId::thm4, "thm4"},
    {IdentityId::cor5, "cor5"},
    {IdentityId::multformula, "multformula"},
    {IdentityId::eq13, "eq13"},
    {IdentityId::eq14, "eq14"},
    {IdentityId::eq17, "eq17"},
    {IdentityId::kernel_sym, "kernel-sym"},
}};

Rational ratio(unsigned num, unsigned den) { return Rational(Integer(num), Integer(den)); }

Rational binom(unsigned n, unsigned k) { return Rational(binomial(n, k)); }

void require_positive(unsigned w, const char* name) {
  if (w == 0) throw std::invalid_argument(std::string(name) + " must be a positive integer");
}

void require_odd(unsigned v, const char* name, const VerifyOptions& opts) {
  if (v % 2 == 1 || opts.allow_even) return;
  throw ParityViolation(std::string(name) + " = " + std::to_string(v) + " is even; the identity needs an odd value");
}

void require_order(unsigned m) {
  if (m == 0) throw std::invalid_argument("m must be at least 1");
}

class Stopwatch {
 public:
  std::chrono::nanoseconds elapsed() const { return std::chrono::steady_clock::now() - start_; }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

VerificationReport finish(const IdentityParams& params, Side lhs, Side rhs, const Stopwatch& clock) {
  VerificationReport r;
  r.params = params;
  if (std::holds_alternative<MPoly>(lhs))
    r.difference = std::get<MPoly>(lhs) - std::get<MPoly>(rhs);
  else
    r.difference = std::get<TSeries>(lhs) - std::get<TSeries>(rhs);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.equal = side_is_zero(r.difference);
  r.elapsed = clock.elapsed();
  return r;
}

MPoly linear_arg(Var v, unsigned scale, const Rational& shift = Rational(0)) {
  return MPoly::variable(v) * Rational(scale) + MPoly(shift);
}

}  // namespace

std::string_view identity_name(IdentityId id) {
  for (const auto& [k, name] : kNames)
    if (k == id) return name;
  return "?";
}

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  return std::nullopt;
}

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> v;
    for (const auto& [k, name] : kNames) v.push_back(k);
    return v;
  }();
  return ids;
}

MPoly thm1_side(unsigned a, unsigned b, unsigned n, unsigned m) {
  const Rational over_a = ratio(1, a);
  const Rational over_b = ratio(1, b);
  const MPoly bx = linear_arg(Var::x, b);
  const MPoly ay = linear_arg(Var::y, a);

  std::vector<MPoly> alt;  // S~_k(a-1 | lambda/b)
  for (unsigned k = 0; k <= n; ++k) alt.push_back(alt_sum(k, a - 1, over_b));

  MPoly total;
  for (unsigned j = 0; j <= n; ++j) {
    MPoly inner;
    for (unsigned k = 0; k <= j; ++k) {
      if (alt[k].is_zero()) continue;
      inner += alt[k] * euler_poly(m - 1, j - k, ay, over_b) * binom(j, k);
    }
    if (inner.is_zero()) continue;
    const Rational weight = binom(n, j) * pow(Rational(b), j) * pow(Rational(a), n - j);
    total += euler_poly(m, n - j, bx, over_a) * inner * weight;
  }
  return total;
}

MPoly thm2_side(unsigned a, unsigned b, unsigned n) {
  const Rational over_a = ratio(1, a);
  const Rational over_b = ratio(1, b);
  const MPoly bx = linear_arg(Var::x, b);
  MPoly total;
  for (unsigned j = 0; j <= n; ++j) {
    const MPoly alt = alt_sum(j, a - 1, over_b);
    if (alt.is_zero()) continue;
    const Rational weight = binom(n, j) * pow(Rational(b), j) * pow(Rational(a), n - j);
    total += euler_poly(1, n - j, bx, over_a) * alt * weight;
  }
  return total;
}

MPoly thm4_side(unsigned a, unsigned b, unsigned n, unsigned m) {
  const Rational over_a = ratio(1, a);
  const Rational over_b = ratio(1, b);
  const MPoly ay = linear_arg(Var::y, a);
  MPoly total;
  for (unsigned k = 0; k <= n; ++k) {
    MPoly alternating;
    for (unsigned i = 0; i < a; ++i)
      alternating += euler_poly(m, k, linear_arg(Var::x, b, ratio(b * i, a)), over_a) * alternating_sign(i);
    if (alternating.is_zero()) continue;
    const Rational weight = binom(n, k) * pow(Rational(a), k) * pow(Rational(b), n - k);
    total += euler_poly(m - 1, n - k, ay, over_b) * alternating * weight;
  }
  return total;
}

MPoly cor5_side(unsigned a, unsigned b, unsigned n) {
  const Rational over_a = ratio(1, a);
  MPoly total;
  for (unsigned i = 0; i < a; ++i)
    total += euler_poly(1, n, linear_arg(Var::x, b, ratio(b * i, a)), over_a) * alternating_sign(i);
  return total * pow(Rational(a), n);
}

TSeries build_kernel(unsigned w1, unsigned w2, unsigned m, std::size_t order) {
  require_positive(w1, "w1");
  require_positive(w2, "w2");
  require_order(m);
  const MPoly one(Rational(1));
  const Rational unit(1);
  const unsigned w12 = w1 * w2;
  auto kernel_of = [&](unsigned w) {
    return recip(degen_exp(MPoly(Rational(w)), unit, order) + TSeries::one(order)) * MPoly(Rational(2));
  };
  const TSeries first = pow(kernel_of(w1), m);
  const TSeries second = pow(kernel_of(w2), m);
  const TSeries x_part = degen_exp(linear_arg(Var::x, w12), unit, order);
  const TSeries y_part = degen_exp(linear_arg(Var::y, w12), unit, order);
  const TSeries middle = degen_exp(MPoly(Rational(w12)), unit, order) + TSeries::one(order);
  return first * x_part * middle * second * y_part * MPoly(ratio(1, 2));
}

VerificationReport verify_thm1(unsigned w1, unsigned w2, unsigned n, unsigned m, VerifyOptions opts) {
  require_positive(w1, "w1");
  require_positive(w2, "w2");
  require_odd(w1, "w1", opts);
  require_odd(w2, "w2", opts);
  require_order(m);
  Stopwatch clock;
  return finish({IdentityId::thm1, w1, w2, n, m, 0}, thm1_side(w1, w2, n, m), thm1_side(w2, w1, n, m), clock);
}

VerificationReport verify_thm2(unsigned w1, unsigned w2, unsigned n, VerifyOptions opts) {
  require_positive(w1, "w1");
  require_positive(w2, "w2");
  require_odd(w1, "w1", opts);
  require_odd(w2, "w2", opts);
  Stopwatch clock;
  return finish({IdentityId::thm2, w1, w2, n, 1, 0}, thm2_side(w1, w2, n), thm2_side(w2, w1, n), clock);
}

VerificationReport verify_cor3(unsigned w1, unsigned n, VerifyOptions opts) {
  require_positive(w1, "w1");
  require_odd(w1, "w1", opts);
  Stopwatch clock;
  const Rational over_w = ratio(1, w1);
  MPoly rhs;
  for (unsigned j = 0; j <= n; ++j) {
    const MPoly alt = alt_sum(j, w1 - 1, Rational(1));
    if (alt.is_zero()) continue;
    rhs += euler_poly(1, n - j, MPoly::x(), over_w) * alt * (binom(n, j) * pow(Rational(w1), n - j));
  }
  return finish({IdentityId::cor3, w1, 1, n, 1, 0}, euler_poly(1, n, linear_arg(Var::x, w1), Rational(1)), rhs,
                clock);
}

VerificationReport verify_thm4(unsigned w1, unsigned w2, unsigned n, unsigned m, VerifyOptions opts) {
  require_positive(w1, "w1");
  require_positive(w2, "w2");
  require_odd(w1, "w1", opts);
  require_odd(w2, "w2", opts);
  require_order(m);
  Stopwatch clock;
  return finish({IdentityId::thm4, w1, w2, n, m, 0}, thm4_side(w1, w2, n, m), thm4_side(w2, w1, n, m), clock);
}

VerificationReport verify_cor5(unsigned w1, unsigned w2, unsigned n, VerifyOptions opts) {
  require_positive(w1, "w1");
  require_positive(w2, "w2");
  require_odd(w1, "w1", opts);
  require_odd(w2, "w2", opts);
  Stopwatch clock;
  return finish({IdentityId::cor5, w1, w2, n, 1, 0}, cor5_side(w1, w2, n), cor5_side(w2, w1, n), clock);
}

VerificationReport verify_multformula(unsigned w1, unsigned n, VerifyOptions opts) {
  require_positive(w1, "w1");
  require_odd(w1, "w1", opts);
  Stopwatch clock;
  const Rational over_w = ratio(1, w1);
  MPoly lhs;
  for (unsigned i = 0; i < w1; ++i)
    lhs += euler_poly(1, n, MPoly::x() + MPoly(ratio(i, w1)), over_w) * alternating_sign(i);
  lhs *= pow(Rational(w1), n);
  return finish({IdentityId::multformula, w1, 1, n, 1, 0}, lhs, euler_poly(1, n, linear_arg(Var::x, w1)), clock);
}

VerificationReport verify_eq13(unsigned n, unsigned m) {
  if (n == 0) throw std::invalid_argument("eq13 needs n >= 1");
  Stopwatch clock;
  const MPoly lhs = euler_poly(1, m, MPoly(Rational(n))) + euler_poly(1, m, MPoly()) * alternating_sign(n - 1);
  MPoly rhs;
  for (unsigned l = 0; l < n; ++l)
    rhs += falling(MPoly(Rational(l)), Rational(1), m) * alternating_sign(n - 1 - l);
  rhs *= Rational(2);
  const IdentityId id = (n % 2 == 1) ? IdentityId::eq14 : IdentityId::eq13;
  return finish({id, 1, 1, n, m, 0}, lhs, rhs, clock);
}

VerificationReport verify_eq14(unsigned n, unsigned m, VerifyOptions opts) {
  require_odd(n, "n", opts);
  return verify_eq13(n, m);
}

VerificationReport verify_eq17(unsigned n, std::size_t order, VerifyOptions opts) {
  require_positive(n, "n");
  require_odd(n, "n", opts);
  Stopwatch clock;
  const Rational unit(1);
  const TSeries lhs = degen_exp(MPoly(Rational(n)), unit, order) + TSeries::one(order);
  TSeries sums(order);
  for (std::size_t k = 0; k <= order; ++k)
    sums[k] = alt_sum(static_cast<unsigned>(k), n - 1, unit) *
              Rational(Integer(1), factorial(static_cast<unsigned>(k)));
  const TSeries rhs = (degen_exp(MPoly(unit), unit, order) + TSeries::one(order)) * sums;
  return finish({IdentityId::eq17, 1, 1, n, 1, static_cast<unsigned>(order)}, lhs, rhs, clock);
}

VerificationReport verify_kernel_sym(unsigned w1, unsigned w2, unsigned m, std::size_t order, VerifyOptions opts) {
  require_positive(w1, "w1");
  require_positive(w2, "w2");
  require_odd(w1, "w1", opts);
  require_odd(w2, "w2", opts);
  require_order(m);
  Stopwatch clock;
  const TSeries k12 = build_kernel(w1, w2, m, order);
  const TSeries k21 = build_kernel(w2, w1, m, order);

  struct Expansion {
    const char* name;
    MPoly (*side)(unsigned, unsigned, unsigned, unsigned);
    unsigned a, b;
  };
  const std::array<Expansion, 4> expansions{{
      {"eq23", &thm1_side, w1, w2},
      {"eq24", &thm1_side, w2, w1},
      {"eq25", &thm4_side, w1, w2},
      {"eq26", &thm4_side, w2, w1},
  }};

  std::vector<SubCheck> subchecks;
  for (const auto& ex : expansions) {
    TSeries diff(order);
    for (std::size_t n = 0; n <= order; ++n) {
      const auto nn = static_cast<unsigned>(n);
      diff[n] = k12[n] * Rational(factorial(nn)) - ex.side(ex.a, ex.b, nn, m);
    }
    const bool ok = diff.is_zero();
    subchecks.push_back({ex.name, ok, std::move(diff)});
  }

  auto report = finish({IdentityId::kernel_sym, w1, w2, 0, m, static_cast<unsigned>(order)}, k12, k21, clock);
  report.subchecks = std::move(subchecks);
  for (const auto& sc : report.subchecks) report.equal = report.equal && sc.equal;
  report.elapsed = clock.elapsed();
  return report;
}

VerificationReport verify(const IdentityParams& p, VerifyOptions opts) {
  switch (p.id) {
    case IdentityId::thm1: return verify_thm1(p.w1, p.w2, p.n, p.m, opts);
    case IdentityId::thm2: return verify_thm2(p.w1, p.w2, p.n, opts);
    case IdentityId::cor3: return verify_cor3(p.w1, p.n, opts);
    case IdentityId::thm4: return verify_thm4(p.w1, p.w2, p.n, p.m, opts);
    case IdentityId::cor5: return verify_cor5(p.w1, p.w2, p.n, opts);
    case IdentityId::multformula: return verify_multformula(p.w1, p.n, opts);
    case IdentityId::eq13: return verify_eq13(p.n, p.m);
    case IdentityId::eq14: return verify_eq14(p.n, p.m, opts);
    case IdentityId::eq17: return verify_eq17(p.n, p.order, opts);
    case IdentityId::kernel_sym: return verify_kernel_sym(p.w1, p.w2, p.m, p.order, opts);
  }
  throw std::logic_error("unknown identity");
}

std::vector<VerificationReport> verify_grid(std::vector<IdentityParams> grid, unsigned jobs, VerifyOptions opts) {
  std::sort(grid.begin(), grid.end());
  std::vector<std::optional<VerificationReport>> slots(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        slots[i] = verify(grid[i], opts);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(grid.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
  }
  std::vector<VerificationReport> out;
  out.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

std::vector<IdentityParams> default_grid(IdentityId id) {
  std::vector<IdentityParams> grid;
  const std::vector<unsigned> small_w{1, 3, 5, 7};
  const std::vector<unsigned> large_w{1, 3, 5, 7, 9};
  switch (id) {
    case IdentityId::thm1:
    case IdentityId::thm4:
      for (unsigned w1 : small_w)
        for (unsigned w2 : small_w)
          for (unsigned n = 0; n <= 8; ++n)
            for (unsigned m = 1; m <= 3; ++m) grid.push_back({id, w1, w2, n, m, 0});
      break;
    case IdentityId::thm2:
    case IdentityId::cor5:
      for (unsigned w1 : large_w)
        for (unsigned w2 : large_w)
          for (unsigned n = 0; n <= 10; ++n) grid.push_back({id, w1, w2, n, 1, 0});
      break;
    case IdentityId::cor3:
    case IdentityId::multformula:
      for (unsigned w1 : large_w)
        for (unsigned n = 0; n <= 10; ++n) grid.push_back({id, w1, 1, n, 1, 0});
      break;
    case IdentityId::eq13:
    case IdentityId::eq14:
      for (unsigned n = 1; n <= 9; ++n) {
        if (id == IdentityId::eq14 && n % 2 == 0) continue;
        for (unsigned m = 0; m <= 10; ++m) grid.push_back({id, 1, 1, n, m, 0});
      }
      break;
    case IdentityId::eq17:
      for (unsigned n : {1U, 3U, 5U, 7U}) grid.push_back({id, 1, 1, n, 1, 8});
      break;
    case IdentityId::kernel_sym:
      for (unsigned w1 : small_w)
        for (unsigned w2 : small_w)
          for (unsigned m = 1; m <= 3; ++m) grid.push_back({id, w1, w2, 0, m, 6});
      break;
  }
  return grid;
}

Json params_to_json(const IdentityParams& p) {
  Json j;
  switch (p.id) {
    case IdentityId::thm1:
    case IdentityId::thm4:
      j = {{"w1", p.w1}, {"w2", p.w2}, {"n", p.n}, {"m", p.m}};
      break;
    case IdentityId::thm2:
    case IdentityId::cor5:
      j = {{"w1", p.w1}, {"w2", p.w2}, {"n", p.n}};
      break;
    case IdentityId::cor3:
    case IdentityId::multformula:
      j = {{"w1", p.w1}, {"n", p.n}};
      break;
    case IdentityId::eq13:
    case IdentityId::eq14:
      j = {{"n", p.n}, {"m", p.m}};
      break;
    case IdentityId::eq17:
      j = {{"n", p.n}, {"order", p.order}};
      break;
    case IdentityId::kernel_sym:
      j = {{"w1", p.w1}, {"w2", p.w2}, {"m", p.m}, {"order", p.order}};
      break;
  }
  return j;
}

Json side_to_json(const Side& s) {
  return std::visit([](const auto& v) -> Json { return to_json(v); }, s);
}

Side side_from_json(const Json& j) {
  // A series is an array of arrays; a polynomial is an array of term objects.
  if (j.is_array() && !j.empty() && j.front().is_array()) return tseries_from_json(j);
  return mpoly_from_json(j);
}

std::string side_to_string(const Side& s) {
  return std::visit([](const auto& v) { return to_string(v); }, s);
}

std::string side_to_latex(const Side& s) {
  return std::visit([](const auto& v) { return to_latex(v); }, s);
}

bool side_is_zero(const Side& s) {
  return std::visit([](const auto& v) { return v.is_zero(); }, s);
}

Json to_json(const VerificationReport& r) {
  Json j{
      {"identity", std::string(identity_name(r.params.id))},
      {"params", params_to_json(r.params)},
      {"equal", r.equal},
      {"lhs", side_to_json(r.lhs)},
      {"rhs", side_to_json(r.rhs)},
      {"difference", side_to_json(r.difference)},
      {"elapsed_ms", std::chrono::duration_cast<std::chrono::milliseconds>(r.elapsed).count()},
  };
  if (!r.subchecks.empty()) {
    auto arr = Json::array();
    for (const auto& sc : r.subchecks)
      arr.push_back({{"name", sc.name}, {"equal", sc.equal}, {"difference", side_to_json(sc.difference)}});
    j["subchecks"] = std::move(arr);
  }
  return j;
}

namespace {

std::string lam(unsigned w) {
  return w == 1 ? "\\lambda" : "\\frac{\\lambda}{" + std::to_string(w) + "}";
}

std::string euler_sym(const std::string& order, const std::string& index, const std::string& arg,
                      const std::string& scale) {
  std::string s = "\\mathcal{E}_{" + index + "}";
  if (!order.empty()) s += "^{(" + order + ")}";
  return s + "\\left(" + arg + "\\,\\middle|\\," + scale + "\\right)";
}

std::string scaled(unsigned w, const char* var) { return w == 1 ? var : std::to_string(w) + var; }

std::string thm1_latex(unsigned a, unsigned b, const IdentityParams& p) {
  const auto n = std::to_string(p.n);
  const auto m = std::to_string(p.m);
  const auto m1 = std::to_string(p.m - 1);
  return "\\sum_{j=0}^{" + n + "}\\binom{" + n + "}{j}" + std::to_string(b) + "^{j}" + std::to_string(a) + "^{" + n +
         "-j}" + euler_sym(m, n + "-j", scaled(b, "x"), lam(a)) + "\\sum_{k=0}^{j}\\tilde{S}_{k}\\left(" +
         std::to_string(a - 1) + "\\,\\middle|\\," + lam(b) + "\\right)\\binom{j}{k}" +
         euler_sym(m1, "j-k", scaled(a, "y"), lam(b));
}

std::string thm2_latex(unsigned a, unsigned b, const IdentityParams& p) {
  const auto n = std::to_string(p.n);
  return "\\sum_{j=0}^{" + n + "}\\binom{" + n + "}{j}" + std::to_string(b) + "^{j}" + std::to_string(a) + "^{" + n +
         "-j}" + euler_sym("", n + "-j", scaled(b, "x"), lam(a)) + "\\tilde{S}_{j}\\left(" + std::to_string(a - 1) +
         "\\,\\middle|\\," + lam(b) + "\\right)";
}

std::string thm4_latex(unsigned a, unsigned b, const IdentityParams& p) {
  const auto n = std::to_string(p.n);
  const auto m = std::to_string(p.m);
  const auto m1 = std::to_string(p.m - 1);
  return "\\sum_{k=0}^{" + n + "}\\binom{" + n + "}{k}" + std::to_string(a) + "^{k}" + std::to_string(b) + "^{" + n +
         "-k}" + euler_sym(m1, n + "-k", scaled(a, "y"), lam(b)) + "\\sum_{i=0}^{" + std::to_string(a - 1) +
         "}(-1)^{i}" + euler_sym(m, "k", scaled(b, "x") + "+\\frac{" + std::to_string(b) + "}{" + std::to_string(a) + "}i",
                                 lam(a));
}

std::string cor5_latex(unsigned a, unsigned b, const IdentityParams& p) {
  const auto n = std::to_string(p.n);
  return std::to_string(a) + "^{" + n + "}\\sum_{i=0}^{" + std::to_string(a - 1) + "}(-1)^{i}" +
         euler_sym("", n, scaled(b, "x") + "+\\frac{" + std::to_string(b) + "}{" + std::to_string(a) + "}i", lam(a));
}

}  // namespace

std::string latex_statement(const IdentityParams& p) {
  const auto n = std::to_string(p.n);
  const auto m = std::to_string(p.m);
  switch (p.id) {
    case IdentityId::thm1: return thm1_latex(p.w1, p.w2, p) + "\n= " + thm1_latex(p.w2, p.w1, p);
    case IdentityId::thm2: return thm2_latex(p.w1, p.w2, p) + "\n= " + thm2_latex(p.w2, p.w1, p);
    case IdentityId::cor3:
      return euler_sym("", n, scaled(p.w1, "x"), "\\lambda") + "\n= \\sum_{j=0}^{" + n + "}\\binom{" + n + "}{j}" +
             std::to_string(p.w1) + "^{" + n + "-j}" + euler_sym("", n + "-j", "x", lam(p.w1)) +
             "\\tilde{S}_{j}\\left(" + std::to_string(p.w1 - 1) + "\\,\\middle|\\,\\lambda\\right)";
    case IdentityId::thm4: return thm4_latex(p.w1, p.w2, p) + "\n= " + thm4_latex(p.w2, p.w1, p);
    case IdentityId::cor5: return cor5_latex(p.w1, p.w2, p) + "\n= " + cor5_latex(p.w2, p.w1, p);
    case IdentityId::multformula:
      return std::to_string(p.w1) + "^{" + n + "}\\sum_{i=0}^{" + std::to_string(p.w1 - 1) + "}(-1)^{i}" +
             euler_sym("", n, "x+\\frac{i}{" + std::to_string(p.w1) + "}", lam(p.w1)) + "\n= " +
             euler_sym("", n, scaled(p.w1, "x"), "\\lambda");
    case IdentityId::eq13:
    case IdentityId::eq14:
      return euler_sym("", m, n, "\\lambda") + " + (-1)^{" + n + "-1}\\mathcal{E}_{" + m +
             "}(\\lambda)\n= 2\\sum_{l=0}^{" + n + "-1}(-1)^{" + n + "-1-l}(l\\mid\\lambda)_{" + m + "}";
    case IdentityId::eq17:
      return "(1+\\lambda t)^{\\frac{" + n + "}{\\lambda}} + 1\n= \\left((1+\\lambda t)^{\\frac{1}{\\lambda}} + "
             "1\\right)\\sum_{k=0}^{" + std::to_string(p.order) + "}\\tilde{S}_{k}(" + std::to_string(p.n - 1) +
             "\\mid\\lambda)\\frac{t^{k}}{k!}";
    case IdentityId::kernel_sym:
      return "K^{(" + m + ")}(" + std::to_string(p.w1) + "," + std::to_string(p.w2) + "\\mid\\lambda)\n= K^{(" + m +
             ")}(" + std::to_string(p.w2) + "," + std::to_string(p.w1) + "\\mid\\lambda)";
  }
  return {};
}

}  // namespace degen
