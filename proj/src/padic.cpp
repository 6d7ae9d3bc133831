#include "degen/padic.hpp"

#include <cstdlib>
#include <vector>

#include "degen/degenerate.hpp"

namespace degen {

BudgetExceeded::BudgetExceeded(const Integer& terms, std::uint64_t budget)
    : std::runtime_error("fermionic sum needs " + terms.get_str() + " terms, budget is " + std::to_string(budget)),
      terms_(terms) {}

std::uint64_t default_term_budget() {
  if (const char* env = std::getenv("DEGEN_EULER_BUDGET")) {
    char* end = nullptr;
    const auto v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultTermBudget;
}

bool is_odd_prime(unsigned p) {
  if (p < 3 || p % 2 == 0) return false;
  for (unsigned d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::optional<long> padic_valuation(const Rational& q, unsigned p) {
  if (q.is_zero()) return std::nullopt;
  auto count = [p](Integer v) {
    long k = 0;
    if (v < 0) v = -v;
    while (mpz_divisible_ui_p(v.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
      ++k;
    }
    return k;
  };
  return count(q.num()) - count(q.den());
}

namespace {

void require_prime(unsigned p) {
  if (!is_odd_prime(p)) throw NonOddPrime("p = " + std::to_string(p) + " is not an odd prime");
}

MPoly fix_lambda(const MPoly& f, const Rational& lambda0) {
  if (f.depends_on(Var::y)) throw std::invalid_argument("fermionic integrand must not depend on y");
  return subst(f, Var::lambda, MPoly(lambda0));
}

// sum_{x < count} (-1)^x x^j for j = 0..degree.
std::vector<Integer> alternating_moments(const Integer& count, unsigned degree) {
  std::vector<Integer> moments(degree + 1, 0);
  const unsigned long n = count.get_ui();
  Integer power;
  for (unsigned long x = 0; x < n; ++x) {
    power = 1;
    const bool negative = (x % 2 == 1);
    for (unsigned j = 0; j <= degree; ++j) {
      if (negative)
        moments[j] -= power;
      else
        moments[j] += power;
      power *= static_cast<unsigned long>(x);
    }
  }
  return moments;
}

Rational evaluate_sum(const MPoly& g, unsigned p, unsigned level, unsigned variables) {
  Integer count;
  mpz_ui_pow_ui(count.get_mpz_t(), p, level);
  const unsigned degree = g.degree(Var::x);
  const auto moments = alternating_moments(count, degree);

  // folded[a] = r-fold sum of (x_1 + ... + x_r)^a, built one variable at a time.
  std::vector<Integer> folded = moments;
  for (unsigned v = 1; v < variables; ++v) {
    std::vector<Integer> next(degree + 1, 0);
    for (unsigned a = 0; a <= degree; ++a)
      for (unsigned b = 0; b <= a; ++b) next[a] += binomial(a, b) * moments[b] * folded[a - b];
    folded = std::move(next);
  }

  Rational value;
  for (const auto& [e, c] : g.terms()) value += c * Rational(folded[e[Var::x]]);
  return value;
}

}  // namespace

FermionicSum fermionic_sum(const MPoly& f, const Rational& lambda0, unsigned p, unsigned level, unsigned variables,
                           const PadicOptions& opts) {
  require_prime(p);
  if (level == 0) throw std::invalid_argument("level N must be at least 1");
  if (variables == 0) throw std::invalid_argument("variable count r must be at least 1");
  Integer terms;
  mpz_ui_pow_ui(terms.get_mpz_t(), p, static_cast<unsigned long>(level) * variables);
  if (terms > Integer(std::to_string(opts.budget))) throw BudgetExceeded(terms, opts.budget);

  const MPoly g = fix_lambda(f, lambda0);
  return FermionicSum{p, level, variables, f, lambda0, evaluate_sum(g, p, level, variables)};
}

Congruence congruence(const Rational& lhs, const Rational& rhs, unsigned p, unsigned required) {
  require_prime(p);
  for (const Rational* q : {&lhs, &rhs}) {
    if (mpz_divisible_ui_p(q->den().get_mpz_t(), p) != 0)
      throw DenominatorNotInvertible("denominator of " + q->to_string() + " is divisible by p = " + std::to_string(p));
  }
  Congruence c;
  c.p = p;
  c.required = required;
  c.lhs = lhs;
  c.rhs = rhs;
  c.valuation = padic_valuation(lhs - rhs, p);
  c.verdict = !c.valuation || *c.valuation >= static_cast<long>(required);
  return c;
}

Congruence check_eq2(const MPoly& f, const Rational& lambda0, unsigned p, unsigned level, const PadicOptions& opts) {
  auto c = check_eq3(f, lambda0, p, level, 1, opts);
  c.check = "eq2";
  return c;
}

Congruence check_eq3(const MPoly& f, const Rational& lambda0, unsigned p, unsigned level, unsigned shift,
                     const PadicOptions& opts) {
  if (shift == 0) throw std::invalid_argument("shift n must be at least 1");
  const MPoly g = fix_lambda(f, lambda0);
  const MPoly shifted = subst(g, Var::x, MPoly::x() + MPoly(Rational(shift)));
  const Rational lhs = fermionic_sum(shifted, lambda0, p, level, 1, opts).value +
                       alternating_sign(shift - 1) * fermionic_sum(g, lambda0, p, level, 1, opts).value;
  Rational rhs;
  for (unsigned l = 0; l < shift; ++l)
    rhs += alternating_sign(shift - 1 - l) * eval(g, Rational(l), Rational(0), lambda0);
  rhs *= Rational(2);
  auto c = congruence(lhs, rhs, p, level);
  c.check = "eq3";
  c.level = level;
  c.index = shift;
  c.lambda = lambda0;
  return c;
}

Congruence check_eq10(unsigned n, unsigned variables, const Rational& lambda0, unsigned p, unsigned level,
                      const PadicOptions& opts) {
  const auto sum = fermionic_sum(falling(MPoly::x(), Rational(1), n), lambda0, p, level, variables, opts);
  const MPoly number = euler_numbers(variables, n).numbers[n];
  auto c = congruence(sum.value, eval(number, Rational(0), Rational(0), lambda0), p, level);
  c.check = "eq10";
  c.level = level;
  c.variables = variables;
  c.index = n;
  c.lambda = lambda0;
  return c;
}

Json to_json(const Congruence& c) {
  Json j{
      {"check", c.check},
      {"p", c.p},
      {"N", c.level},
      {"r", c.variables},
      {"n", c.index},
      {"lambda", c.lambda.to_string()},
      {"sum", c.lhs.to_string()},
      {"target", c.rhs.to_string()},
      {"valuation", nullptr},
      {"required", c.required},
      {"pass", c.verdict},
      {"exact", !c.valuation.has_value()},
  };
  if (c.valuation) j["valuation"] = *c.valuation;
  return j;
}

}  // namespace degen
