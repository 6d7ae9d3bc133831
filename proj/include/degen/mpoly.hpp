#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "degen/rational.hpp"

namespace degen {

/// JSON value type; keys keep insertion order so output follows the documented schemas.
using Json = nlohmann::ordered_json;

/// The three indeterminates of the ring Q[x, y, lambda].
enum class Var : std::uint8_t { x = 0, y = 1, lambda = 2 };

/// Exponent triple (powers of x, y, lambda).
struct Exponent {
  std::array<std::uint32_t, 3> e{0, 0, 0};

  std::uint32_t operator[](Var v) const { return e[static_cast<std::size_t>(v)]; }
  std::uint32_t& operator[](Var v) { return e[static_cast<std::size_t>(v)]; }
  std::uint32_t degree() const { return e[0] + e[1] + e[2]; }

  friend Exponent operator+(const Exponent& a, const Exponent& b) {
    return {{a.e[0] + b.e[0], a.e[1] + b.e[1], a.e[2] + b.e[2]}};
  }
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Graded-lexicographic order, highest term first.
struct GradedLexDescending {
  bool operator()(const Exponent& a, const Exponent& b) const {
    if (a.degree() != b.degree()) return a.degree() > b.degree();
    return a.e > b.e;
  }
};

/// Sparse polynomial in x, y, lambda with rational coefficients.
///
/// Canonical by construction: no stored coefficient is zero, so two
/// polynomials are equal iff their term maps are identical.
class MPoly {
 public:
  using TermMap = std::map<Exponent, Rational, GradedLexDescending>;

  MPoly() = default;
  MPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  template <std::integral T>
  MPoly(T c) : MPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

  static MPoly variable(Var v);
  static MPoly x() { return variable(Var::x); }
  static MPoly y() { return variable(Var::y); }
  static MPoly lambda() { return variable(Var::lambda); }
  static MPoly monomial(const Exponent& e, const Rational& c);

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The value if the polynomial is constant, empty otherwise.
  std::optional<Rational> constant_value() const;
  Rational coefficient(const Exponent& e) const;
  std::uint32_t degree(Var v) const;
  std::uint32_t total_degree() const;
  bool depends_on(Var v) const { return degree(v) > 0; }

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const MPoly& o);
  MPoly& operator*=(const Rational& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }
  friend MPoly operator-(MPoly a) { return a *= Rational(-1); }

  friend bool operator==(const MPoly&, const MPoly&) = default;

  /// Adds c * x^e in place, keeping the map canonical.
  void add_term(const Exponent& e, const Rational& c);

 private:
  TermMap terms_;
};

MPoly pow(const MPoly& p, unsigned exponent);

/// Replaces every occurrence of `v` by `replacement` and expands.
MPoly subst(const MPoly& p, Var v, const MPoly& replacement);

/// Special case of subst for v -> c * v; rescales coefficients only.
MPoly scale_var(const MPoly& p, Var v, const Rational& c);

Rational eval(const MPoly& p, const Rational& x0, const Rational& y0, const Rational& lambda0);

/// Plain-text term list, highest graded-lex term first, lambda spelled `L`.
/// Example: `x^2 - x*L - x + 1/2*L`.
std::string to_string(const MPoly& p);

/// Parses polynomial expressions over x, y, L (or `lambda`) with integers,
/// `/`, `+`, `-`, `*`, `^` and parentheses. Accepts everything to_string emits.
/// Division is only allowed by a nonzero constant.
MPoly parse_poly(std::string_view text);

std::string to_latex(const MPoly& p);

/// `[{"e":[a,b,c],"n":"...","d":"..."}, ...]` in graded-lex order.
Json to_json(const MPoly& p);
MPoly mpoly_from_json(const Json& j);

}  // namespace degen
