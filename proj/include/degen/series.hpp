#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "degen/mpoly.hpp"

namespace degen {

/// Thrown by recip() when the constant term is not a nonzero rational.
class NonUnitConstantTerm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Truncated power series c_0 + c_1 t + ... + c_N t^N over Q[x, y, lambda].
///
/// Always holds exactly order()+1 coefficients. Binary operations on series
/// of different orders truncate to the smaller order.
class TSeries {
 public:
  explicit TSeries(std::size_t order) : coeffs_(order + 1) {}
  explicit TSeries(std::vector<MPoly> coeffs);

  static TSeries constant(const MPoly& c, std::size_t order);
  static TSeries one(std::size_t order) { return constant(MPoly(Rational(1)), order); }

  std::size_t order() const { return coeffs_.size() - 1; }
  const MPoly& operator[](std::size_t n) const { return coeffs_.at(n); }
  MPoly& operator[](std::size_t n) { return coeffs_.at(n); }
  const std::vector<MPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const;

  /// Same series cut down to a lower order.
  TSeries truncated(std::size_t order) const;

  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  TSeries& operator*=(const MPoly& c);

  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(const TSeries& a, const TSeries& b);
  friend TSeries operator*(TSeries a, const MPoly& c) { return a *= c; }
  friend TSeries operator*(const MPoly& c, TSeries a) { return a *= c; }

  friend bool operator==(const TSeries&, const TSeries&) = default;

 private:
  std::vector<MPoly> coeffs_;
};

/// Multiplicative inverse up to the truncation order.
TSeries recip(const TSeries& a);

/// a^r by repeated multiplication; a^0 is the unit series.
TSeries pow(const TSeries& a, unsigned r);

/// (1 + s*lambda*t)^(u/(s*lambda)) = sum_n (u | s*lambda)_n t^n / n!.
/// s = 0 gives the ordinary exponential exp(u t).
TSeries degen_exp(const MPoly& u, const Rational& s, std::size_t order);

/// Applies subst() to each coefficient.
TSeries subst(const TSeries& a, Var v, const MPoly& replacement);

/// `c0 + (c1)*t + ... + (cN)*t^N`; zero coefficients are skipped.
std::string to_string(const TSeries& a);
std::string to_latex(const TSeries& a);
Json to_json(const TSeries& a);
TSeries tseries_from_json(const Json& j);

}  // namespace degen
