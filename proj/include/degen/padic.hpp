#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "degen/mpoly.hpp"

namespace degen {

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const Integer& terms, std::uint64_t budget);
  const Integer& terms() const { return terms_; }

 private:
  Integer terms_;
};

class NonOddPrime : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class DenominatorNotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline constexpr std::uint64_t kDefaultTermBudget = 10'000'000;

/// Term budget from DEGEN_EULER_BUDGET if set and valid, else the default.
std::uint64_t default_term_budget();

struct PadicOptions {
  std::uint64_t budget = default_term_budget();
};

/// Exact value of sum_{x_1..x_r < p^N} f(x_1 + ... + x_r) prod (-1)^{x_i}
/// with lambda fixed to a rational.
struct FermionicSum {
  unsigned p = 3;
  unsigned level = 1;
  unsigned variables = 1;
  MPoly integrand;
  Rational lambda;
  Rational value;
};

/// Result of testing lhs == rhs (mod p^M).
struct Congruence {
  std::string check;
  unsigned p = 3;
  unsigned required = 1;  // M
  unsigned level = 1;     // N
  unsigned variables = 1;
  unsigned index = 0;     // n (shift or polynomial index)
  Rational lambda;
  Rational lhs;
  Rational rhs;
  std::optional<long> valuation;  // empty when lhs == rhs exactly
  bool verdict = false;
};

bool is_odd_prime(unsigned p);

/// p-adic valuation of a nonzero rational; empty for zero.
std::optional<long> padic_valuation(const Rational& q, unsigned p);

/// Budget counts the naive p^(N*r) terms.
FermionicSum fermionic_sum(const MPoly& f, const Rational& lambda0, unsigned p, unsigned level, unsigned variables,
                           const PadicOptions& opts = {});

/// Compares lhs and rhs modulo p^required.
Congruence congruence(const Rational& lhs, const Rational& rhs, unsigned p, unsigned required);

/// sum f(x+1) + sum f(x) == 2 f(0) (mod p^N)
Congruence check_eq2(const MPoly& f, const Rational& lambda0, unsigned p, unsigned level,
                     const PadicOptions& opts = {});

/// sum f(x+n) + (-1)^(n-1) sum f(x) == 2 sum_{l<n} (-1)^(n-1-l) f(l) (mod p^N)
Congruence check_eq3(const MPoly& f, const Rational& lambda0, unsigned p, unsigned level, unsigned shift,
                     const PadicOptions& opts = {});

/// r-fold sum of (x_1+...+x_r | lambda0)_n == E_n^(r)(lambda0) (mod p^N)
Congruence check_eq10(unsigned n, unsigned variables, const Rational& lambda0, unsigned p, unsigned level,
                      const PadicOptions& opts = {});

Json to_json(const Congruence& c);

}  // namespace degen
