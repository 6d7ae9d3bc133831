#include "degen/degenerate.hpp"

#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <utility>

namespace degen {

MPoly falling(const MPoly& u, const Rational& s, unsigned n) {
  MPoly result(Rational(1));
  const MPoly step = MPoly::lambda() * s;
  for (unsigned j = 0; j < n; ++j) result *= u - step * Rational(j);
  return result;
}

namespace {

class StirlingTable {
 public:
  Rational get(unsigned n, unsigned l) {
    {
      std::shared_lock lock(mutex_);
      if (n < rows_.size()) return Rational(rows_[n][l]);
    }
    std::unique_lock lock(mutex_);
    while (rows_.size() <= n) {
      const unsigned m = static_cast<unsigned>(rows_.size()) - 1;
      const auto& prev = rows_.back();
      std::vector<Integer> next(m + 2);
      for (unsigned k = 0; k <= m + 1; ++k) {
        Integer v = 0;
        if (k >= 1) v += prev[k - 1];
        if (k <= m) v -= Integer(m) * prev[k];
        next[k] = v;
      }
      rows_.push_back(std::move(next));
    }
    return Rational(rows_[n][l]);
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::vector<Integer>> rows_{{Integer(1)}};
};

StirlingTable& stirling_table() {
  static StirlingTable table;
  return table;
}

}  // namespace

Rational stirling1(unsigned n, unsigned l) {
  if (l > n) throw IndexOutOfRange("stirling1: l = " + std::to_string(l) + " exceeds n = " + std::to_string(n));
  return stirling_table().get(n, l);
}

MPoly stirling_expand(unsigned n) {
  MPoly p;
  for (unsigned l = 0; l <= n; ++l) {
    Exponent e;
    e[Var::x] = l;
    e[Var::lambda] = n - l;
    p.add_term(e, stirling1(n, l));
  }
  return p;
}

TSeries euler_kernel(const Rational& s, std::size_t order) {
  TSeries denom = degen_exp(MPoly(Rational(1)), s, order) + TSeries::one(order);
  return recip(denom) * MPoly(Rational(2));
}

namespace {

std::vector<MPoly> numbers_by_series(unsigned r, unsigned max_index) {
  const TSeries gf = pow(euler_kernel(Rational(1), max_index), r);
  std::vector<MPoly> out;
  for (unsigned n = 0; n <= max_index; ++n) out.push_back(gf[n] * Rational(factorial(n)));
  return out;
}

std::vector<MPoly> delta_family(unsigned max_index) {
  std::vector<MPoly> out(max_index + 1);
  out[0] = MPoly(Rational(1));
  return out;
}

std::vector<MPoly> first_order_by_recurrence(unsigned max_index) {
  std::vector<MPoly> e;
  const MPoly one(Rational(1));
  for (unsigned n = 0; n <= max_index; ++n) {
    MPoly rhs(n == 0 ? Rational(2) : Rational(0));
    for (unsigned k = 0; k < n; ++k) rhs -= e[k] * falling(one, Rational(1), n - k) * Rational(binomial(n, k));
    e.push_back(rhs * Rational(Integer(1), Integer(2)));
  }
  return e;
}

std::vector<MPoly> convolve(const std::vector<MPoly>& a, const std::vector<MPoly>& b, unsigned max_index) {
  std::vector<MPoly> out;
  for (unsigned n = 0; n <= max_index; ++n) {
    MPoly sum;
    for (unsigned k = 0; k <= n; ++k) sum += a[k] * b[n - k] * Rational(binomial(n, k));
    out.push_back(std::move(sum));
  }
  return out;
}

std::vector<MPoly> numbers_by_recurrence(unsigned r, unsigned max_index) {
  if (r == 0) return delta_family(max_index);
  const auto first = first_order_by_recurrence(max_index);
  std::vector<MPoly> acc = first;
  for (unsigned i = 1; i < r; ++i) acc = convolve(acc, first, max_index);
  return acc;
}

// Keeps the longest list computed so far for each (order, method).
class EulerCache {
 public:
  std::vector<MPoly> get(unsigned r, unsigned max_index, EulerMethod method) {
    const auto key = std::make_pair(r, method);
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end() && it->second.size() > max_index)
        return {it->second.begin(), it->second.begin() + max_index + 1};
    }
    auto fresh = method == EulerMethod::series ? numbers_by_series(r, max_index) : numbers_by_recurrence(r, max_index);
    std::unique_lock lock(mutex_);
    auto& slot = cache_[key];
    if (slot.size() < fresh.size()) slot = fresh;
    return fresh;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<unsigned, EulerMethod>, std::vector<MPoly>> cache_;
};

EulerCache& euler_cache() {
  static EulerCache cache;
  return cache;
}

}  // namespace

EulerFamily euler_numbers(unsigned r, unsigned max_index, EulerMethod method) {
  return EulerFamily{r, max_index, method, euler_cache().get(r, max_index, method)};
}

MPoly euler_poly(unsigned r, unsigned n, const MPoly& u, const Rational& s) {
  if (r == 0) return falling(u, s, n);
  const auto family = euler_cache().get(r, n, EulerMethod::recurrence);
  MPoly sum;
  for (unsigned k = 0; k <= n; ++k) {
    sum += scale_var(family[k], Var::lambda, s) * falling(u, s, n - k) * Rational(binomial(n, k));
  }
  return sum;
}

MPoly alt_sum(unsigned k, unsigned n, const Rational& s) {
  MPoly sum;
  for (unsigned l = 0; l <= n; ++l) sum += falling(MPoly(Rational(l)), s, k) * alternating_sign(l);
  return sum;
}

MPoly classical_limit(const MPoly& p) { return subst(p, Var::lambda, MPoly()); }

}  // namespace degen
