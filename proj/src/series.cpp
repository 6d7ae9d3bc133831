#include "degen/series.hpp"

#include <algorithm>

#include "degen/falling.hpp"

namespace degen {

TSeries::TSeries(std::vector<MPoly> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("TSeries needs at least one coefficient");
}

TSeries TSeries::constant(const MPoly& c, std::size_t order) {
  TSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

bool TSeries::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const MPoly& c) { return c.is_zero(); });
}

TSeries TSeries::truncated(std::size_t order) const {
  if (order > this->order()) throw std::invalid_argument("cannot raise truncation order");
  return TSeries(std::vector<MPoly>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

TSeries& TSeries::operator+=(const TSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += o.coeffs_[n];
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
  coeffs_.resize(std::min(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= o.coeffs_[n];
  return *this;
}

TSeries& TSeries::operator*=(const MPoly& c) {
  for (auto& v : coeffs_) v *= c;
  return *this;
}

TSeries operator*(const TSeries& a, const TSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  TSeries r(order);
  for (std::size_t n = 0; n <= order; ++n) {
    MPoly sum;
    for (std::size_t k = 0; k <= n; ++k) {
      if (a[k].is_zero() || b[n - k].is_zero()) continue;
      sum += a[k] * b[n - k];
    }
    r[n] = std::move(sum);
  }
  return r;
}

TSeries recip(const TSeries& a) {
  const auto c0 = a[0].constant_value();
  if (!c0 || c0->is_zero()) throw NonUnitConstantTerm("series constant term is not a nonzero rational: " + to_string(a[0]));
  const Rational inv = Rational(1) / *c0;
  TSeries b(a.order());
  b[0] = MPoly(inv);
  for (std::size_t n = 1; n <= a.order(); ++n) {
    MPoly sum;
    for (std::size_t k = 1; k <= n; ++k) {
      if (a[k].is_zero() || b[n - k].is_zero()) continue;
      sum += a[k] * b[n - k];
    }
    b[n] = sum * (-inv);
  }
  return b;
}

TSeries pow(const TSeries& a, unsigned r) {
  TSeries result = TSeries::one(a.order());
  for (unsigned i = 0; i < r; ++i) result = result * a;
  return result;
}

TSeries degen_exp(const MPoly& u, const Rational& s, std::size_t order) {
  TSeries r(order);
  for (std::size_t n = 0; n <= order; ++n)
    r[n] = falling(u, s, static_cast<unsigned>(n)) * Rational(Integer(1), factorial(static_cast<unsigned>(n)));
  return r;
}

TSeries subst(const TSeries& a, Var v, const MPoly& replacement) {
  TSeries r(a.order());
  for (std::size_t n = 0; n <= a.order(); ++n) r[n] = subst(a[n], v, replacement);
  return r;
}

std::string to_string(const TSeries& a) {
  std::string out;
  for (std::size_t n = 0; n <= a.order(); ++n) {
    if (a[n].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (n == 0) {
      out += to_string(a[n]);
    } else {
      out += "(" + to_string(a[n]) + ")*t";
      if (n > 1) out += "^" + std::to_string(n);
    }
  }
  return out.empty() ? "0" : out;
}

std::string to_latex(const TSeries& a) {
  std::string out;
  for (std::size_t n = 0; n <= a.order(); ++n) {
    if (a[n].is_zero()) continue;
    if (!out.empty()) out += " + ";
    if (n == 0) {
      out += to_latex(a[n]);
    } else {
      out += "\\left(" + to_latex(a[n]) + "\\right)t";
      if (n > 1) out += "^{" + std::to_string(n) + "}";
    }
  }
  return (out.empty() ? "0" : out) + " + O(t^{" + std::to_string(a.order() + 1) + "})";
}

Json to_json(const TSeries& a) {
  auto arr = Json::array();
  for (const auto& c : a.coeffs()) arr.push_back(to_json(c));
  return arr;
}

TSeries tseries_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("series JSON must be a nonempty array");
  std::vector<MPoly> coeffs;
  for (const auto& c : j) coeffs.push_back(mpoly_from_json(c));
  return TSeries(std::move(coeffs));
}

}  // namespace degen
