#pragma once

#include <stdexcept>
#include <vector>

#include "degen/falling.hpp"
#include "degen/mpoly.hpp"
#include "degen/series.hpp"

namespace degen {

class IndexOutOfRange : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Signed Stirling number of the first kind, from the triangular recurrence
/// S1(n+1, l) = S1(n, l-1) - n*S1(n, l). Rows are memoized.
Rational stirling1(unsigned n, unsigned l);

/// sum_l S1(n, l) lambda^(n-l) x^l, which equals falling(x, 1, n).
MPoly stirling_expand(unsigned n);

enum class EulerMethod { series, recurrence };

/// Higher-order degenerate Euler numbers E_n^(r)(lambda), n = 0..max_index,
/// each a polynomial in lambda only.
struct EulerFamily {
  unsigned order = 0;
  unsigned max_index = 0;
  EulerMethod method = EulerMethod::recurrence;
  std::vector<MPoly> numbers;
};

/// `series` extracts n! [t^n] of (2 / ((1+lambda t)^(1/lambda) + 1))^r.
/// `recurrence` solves sum_k C(n,k) E_k (1|lambda)_{n-k} + E_n = 2 delta_{n0}
/// for r = 1 and convolves binomially for higher r. Order 0 gives delta_{n0}.
/// Results are memoized per (order, method).
EulerFamily euler_numbers(unsigned r, unsigned max_index, EulerMethod method = EulerMethod::recurrence);

/// E_n^(r)(u | s*lambda) = sum_k C(n,k) E_k^(r)(s*lambda) (u | s*lambda)_{n-k}.
/// Order 0 is the bare falling factorial (u | s*lambda)_n.
MPoly euler_poly(unsigned r, unsigned n, const MPoly& u, const Rational& s = Rational(1));

/// Alternating degenerate power sum sum_{l=0}^{n} (-1)^l (l | s*lambda)_k.
MPoly alt_sum(unsigned k, unsigned n, const Rational& s = Rational(1));

/// lambda -> 0.
MPoly classical_limit(const MPoly& p);

/// The kernel 2 / ((1 + s*lambda*t)^(1/(s*lambda)) + 1) truncated at `order`.
TSeries euler_kernel(const Rational& s, std::size_t order);

}  // namespace degen
