#include "degen/mpoly.hpp"

#include <cctype>
#include <stdexcept>
#include <vector>

namespace degen {

MPoly::MPoly(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(Exponent{}, c);
}

MPoly MPoly::variable(Var v) {
  Exponent e;
  e[v] = 1;
  return monomial(e, Rational(1));
}

MPoly MPoly::monomial(const Exponent& e, const Rational& c) {
  MPoly p;
  p.add_term(e, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0);
}

std::optional<Rational> MPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) return std::nullopt;
  return terms_.begin()->second;
}

Rational MPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint32_t MPoly::degree(Var v) const {
  std::uint32_t d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[v]);
  return d;
}

std::uint32_t MPoly::total_degree() const {
  // Graded order puts the highest total degree first.
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

void MPoly::add_term(const Exponent& e, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& o) {
  *this = *this * o;
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

MPoly pow(const MPoly& p, unsigned exponent) {
  MPoly result(Rational(1));
  MPoly base = p;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

MPoly subst(const MPoly& p, Var v, const MPoly& replacement) {
  const std::uint32_t deg = p.degree(v);
  if (deg == 0) return p;
  std::vector<MPoly> powers{MPoly(Rational(1))};
  for (std::uint32_t k = 1; k <= deg; ++k) powers.push_back(powers.back() * replacement);

  MPoly result;
  for (const auto& [e, c] : p.terms()) {
    Exponent rest = e;
    rest[v] = 0;
    const MPoly& rp = powers[e[v]];
    for (const auto& [er, cr] : rp.terms()) result.add_term(rest + er, c * cr);
  }
  return result;
}

MPoly scale_var(const MPoly& p, Var v, const Rational& c) {
  if (c.is_zero()) return subst(p, v, MPoly());
  MPoly result;
  std::vector<Rational> powers{Rational(1)};
  for (const auto& [e, coeff] : p.terms()) {
    while (powers.size() <= e[v]) powers.push_back(powers.back() * c);
    result.add_term(e, coeff * powers[e[v]]);
  }
  return result;
}

Rational eval(const MPoly& p, const Rational& x0, const Rational& y0, const Rational& lambda0) {
  Rational sum;
  for (const auto& [e, c] : p.terms())
    sum += c * pow(x0, e[Var::x]) * pow(y0, e[Var::y]) * pow(lambda0, e[Var::lambda]);
  return sum;
}

namespace {

constexpr std::array<const char*, 3> kPlainNames{"x", "y", "L"};
constexpr std::array<const char*, 3> kLatexNames{"x", "y", "\\lambda"};

std::string monomial_text(const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (e.e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += kPlainNames[i];
    if (e.e[i] > 1) out += '^' + std::to_string(e.e[i]);
  }
  return out;
}

std::string monomial_latex(const Exponent& e) {
  std::string out;
  for (std::size_t i = 0; i < 3; ++i) {
    if (e.e[i] == 0) continue;
    out += kLatexNames[i];
    if (e.e[i] > 1) out += "^{" + std::to_string(e.e[i]) + "}";
  }
  return out;
}

std::string rational_latex(const Rational& r) {
  if (r.is_integer()) return r.num().get_str();
  return "\\frac{" + r.num().get_str() + "}{" + r.den().get_str() + "}";
}

}  // namespace

std::string to_string(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c.sign() < 0;
    const Rational magnitude = negative ? -c : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (e.degree() == 0)
      out += magnitude.to_string();
    else if (magnitude.is_one())
      out += monomial_text(e);
    else
      out += magnitude.to_string() + "*" + monomial_text(e);
  }
  return out;
}

std::string to_latex(const MPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    const bool negative = c.sign() < 0;
    const Rational magnitude = negative ? -c : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    if (e.degree() == 0)
      out += rational_latex(magnitude);
    else if (magnitude.is_one())
      out += monomial_latex(e);
    else
      out += rational_latex(magnitude) + monomial_latex(e);
  }
  return out;
}

Json to_json(const MPoly& p) {
  auto arr = Json::array();
  for (const auto& [e, c] : p.terms()) {
    arr.push_back({{"e", {e.e[0], e.e[1], e.e[2]}}, {"n", c.num().get_str()}, {"d", c.den().get_str()}});
  }
  return arr;
}

MPoly mpoly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  MPoly p;
  for (const auto& term : j) {
    const auto& ej = term.at("e");
    if (!ej.is_array() || ej.size() != 3) throw std::invalid_argument("exponent must be [a,b,c]");
    Exponent e{{ej[0].get<std::uint32_t>(), ej[1].get<std::uint32_t>(), ej[2].get<std::uint32_t>()}};
    p.add_term(e, Rational(Integer(term.at("n").get<std::string>()), Integer(term.at("d").get<std::string>())));
  }
  return p;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  MPoly parse() {
    MPoly p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected character");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what +
                                " in '" + std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool starts_factor() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '(';
  }

  MPoly expression() {
    MPoly acc = term();
    for (;;) {
      const char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MPoly term() {
    MPoly acc = unary();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        acc *= unary();
      } else if (c == '/') {
        ++pos_;
        const auto divisor = unary().constant_value();
        if (!divisor) fail("division by a non-constant");
        if (divisor->is_zero()) fail("division by zero");
        acc *= Rational(1) / *divisor;
      } else if (starts_factor()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  MPoly unary() {
    const char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  MPoly power() {
    MPoly base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected a nonnegative integer exponent");
      base = pow(base, static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MPoly primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      MPoly inner = expression();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return MPoly(Rational(Integer(std::string(text_.substr(start, pos_ - start)))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const auto name = text_.substr(start, pos_ - start);
      if (name == "x") return MPoly::x();
      if (name == "y") return MPoly::y();
      if (name == "L" || name == "lambda") return MPoly::lambda();
      pos_ = start;
      fail("unknown variable '" + std::string(name) + "'");
    }
    fail("expected a number, variable or '('");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

MPoly parse_poly(std::string_view text) { return PolyParser(text).parse(); }

}  // namespace degen
