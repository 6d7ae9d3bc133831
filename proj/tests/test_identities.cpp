#include <doctest.h>

#include "degen/degenerate.hpp"
#include "degen/identities.hpp"
#include "oracles.hpp"
#include "printing.hpp"

using namespace degen;

namespace {
const MPoly X = MPoly::x();
const MPoly Y = MPoly::y();
const MPoly L = MPoly::lambda();
Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }

// Second construction of the identity sides: Euler polynomials from the
// generating function, alternating sums term by term. `classical` sets every
// lambda scale to zero, giving the ordinary (non-degenerate) identity.
Rational scale(unsigned w, bool classical) { return classical ? Rational(0) : q(1, w); }

MPoly thm1_oracle(unsigned a, unsigned b, unsigned n, unsigned m, bool classical = false) {
  MPoly total;
  for (unsigned j = 0; j <= n; ++j) {
    MPoly inner;
    for (unsigned k = 0; k <= j; ++k)
      inner += oracle::alt_sum_direct(k, a - 1, scale(b, classical)) *
               oracle::euler_poly_by_gf(m - 1, j - k, Y * Rational(a), scale(b, classical)) * oracle::binom(j, k);
    total += oracle::euler_poly_by_gf(m, n - j, X * Rational(b), scale(a, classical)) * inner *
             (oracle::binom(n, j) * pow(Rational(b), j) * pow(Rational(a), n - j));
  }
  return total;
}

MPoly thm4_oracle(unsigned a, unsigned b, unsigned n, unsigned m, bool classical = false) {
  MPoly total;
  for (unsigned k = 0; k <= n; ++k) {
    MPoly alternating;
    for (unsigned i = 0; i < a; ++i)
      alternating += oracle::euler_poly_by_gf(m, k, X * Rational(b) + MPoly(q(b * i, a)), scale(a, classical)) *
                     oracle::sign(i);
    total += oracle::euler_poly_by_gf(m - 1, n - k, Y * Rational(a), scale(b, classical)) * alternating *
             (oracle::binom(n, k) * pow(Rational(a), k) * pow(Rational(b), n - k));
  }
  return total;
}

const MPoly& lhs_poly(const VerificationReport& r) { return std::get<MPoly>(r.lhs); }
const MPoly& rhs_poly(const VerificationReport& r) { return std::get<MPoly>(r.rhs); }
MPoly at_y0(const MPoly& p) { return subst(p, Var::y, MPoly()); }
}  // namespace

TEST_CASE("thm1 examples") {
  for (unsigned n = 0; n <= 4; ++n) {
    for (unsigned m = 1; m <= 2; ++m) {
      const auto r = verify_thm1(1, 1, n, m);
      CHECK(r.equal);
      MPoly expected;
      for (unsigned j = 0; j <= n; ++j)
        expected += euler_poly(m, n - j, X) * euler_poly(m - 1, j, Y) * oracle::binom(n, j);
      CHECK(lhs_poly(r) == expected);
    }
  }

  const auto r = verify_thm1(3, 1, 1, 1);
  CHECK(r.equal);
  CHECK(lhs_poly(r) == X * Rational(3) + Y * Rational(3) - MPoly(q(1, 2)));
  CHECK(at_y0(lhs_poly(r)) == X * Rational(3) - MPoly(q(1, 2)));

  const auto big = verify_thm1(3, 5, 4, 2);
  CHECK(big.equal);
  CHECK(std::get<MPoly>(big.difference).is_zero());
  CHECK(lhs_poly(big) == thm1_oracle(3, 5, 4, 2));
  CHECK(rhs_poly(big) == thm1_oracle(5, 3, 4, 2));
}

TEST_CASE("thm2 examples") {
  for (unsigned n = 0; n <= 5; ++n) {
    const auto r = verify_thm2(1, 1, n);
    CHECK(r.equal);
    CHECK(lhs_poly(r) == euler_poly(1, n, X));
  }
  const auto r = verify_thm2(3, 1, 1);
  CHECK(lhs_poly(r) == X * Rational(3) - MPoly(q(1, 2)));
  CHECK(rhs_poly(r) == X * Rational(3) - MPoly(q(1, 2)));

  const auto big = verify_thm2(5, 3, 6);
  CHECK(big.equal);
  CHECK(lhs_poly(big) == at_y0(thm1_oracle(5, 3, 6, 1)));
}

TEST_CASE("cor3 examples") {
  for (unsigned n = 0; n <= 5; ++n) {
    const auto r = verify_cor3(1, n);
    CHECK(r.equal);
    CHECK(lhs_poly(r) == euler_poly(1, n, X));
  }
  CHECK(lhs_poly(verify_cor3(3, 1)) == X * Rational(3) - MPoly(q(1, 2)));
  const auto r = verify_cor3(3, 2);
  CHECK(r.equal);
  CHECK(rhs_poly(r) == X * X * Rational(9) - (MPoly(1) + L) * X * Rational(3) + L * q(1, 2));
}

TEST_CASE("thm4 examples") {
  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned m = 1; m <= 2; ++m) {
      const auto r = verify_thm4(1, 1, n, m);
      CHECK(r.equal);
      CHECK(lhs_poly(r) == rhs_poly(r));
    }
  const auto r = verify_thm4(3, 1, 1, 1);
  CHECK(r.equal);
  CHECK(at_y0(lhs_poly(r)) == X * Rational(3) - MPoly(q(1, 2)));

  const auto big = verify_thm4(3, 5, 3, 2);
  CHECK(big.equal);
  CHECK(lhs_poly(big) == thm4_oracle(3, 5, 3, 2));
  CHECK(rhs_poly(big) == thm4_oracle(5, 3, 3, 2));
}

TEST_CASE("cor5 and multiplication formula examples") {
  CHECK(verify_cor5(1, 1, 4).equal);
  const auto r = verify_cor5(3, 1, 1);
  CHECK(lhs_poly(r) == X * Rational(3) - MPoly(q(1, 2)));
  CHECK(rhs_poly(r) == X * Rational(3) - MPoly(q(1, 2)));
  const auto big = verify_cor5(5, 3, 4);
  CHECK(big.equal);
  CHECK(lhs_poly(big) == at_y0(thm4_oracle(5, 3, 4, 1)));

  CHECK(lhs_poly(verify_multformula(1, 3)) == euler_poly(1, 3, X));
  const auto mf = verify_multformula(3, 1);
  CHECK(lhs_poly(mf) == X * Rational(3) - MPoly(q(1, 2)));
  CHECK(verify_multformula(5, 3).equal);
}

TEST_CASE("eq13 and eq14 examples") {
  const auto a = verify_eq13(1, 1);
  CHECK(a.equal);
  CHECK(lhs_poly(a).is_zero());
  CHECK(a.params.id == IdentityId::eq14);
  const auto b = verify_eq13(1, 0);
  CHECK(lhs_poly(b) == MPoly(2));
  CHECK(rhs_poly(b) == MPoly(2));
  const auto c = verify_eq13(3, 2);
  CHECK(c.equal);
  const auto d = verify_eq13(4, 3);
  CHECK(d.equal);
  CHECK(d.params.id == IdentityId::eq13);
  CHECK_THROWS_AS(verify_eq14(4, 3), ParityViolation);
  CHECK(verify_eq14(4, 3, {.allow_even = true}).equal);
  CHECK_THROWS_AS(verify_eq13(0, 1), std::invalid_argument);
}

TEST_CASE("eq17 examples") {
  const auto one = verify_eq17(1, 5);
  CHECK(one.equal);
  CHECK(std::get<TSeries>(one.lhs) == std::get<TSeries>(one.rhs));
  const auto three = verify_eq17(3, 4);
  CHECK(three.equal);
  CHECK(std::get<TSeries>(three.lhs)[0] == MPoly(2));
  CHECK(std::get<TSeries>(three.lhs).order() == 4);
  CHECK(verify_eq17(5, 6).equal);
  CHECK_THROWS_AS(verify_eq17(2, 4), ParityViolation);
}

TEST_CASE("kernel examples") {
  const TSeries k = build_kernel(1, 1, 1, 5);
  for (unsigned n = 0; n <= 5; ++n)
    CHECK(k[n] * oracle::fact(n) == euler_poly(1, n, X + Y));
  for (auto [w1, w2, m] : {std::tuple{1U, 1U, 1U}, {3U, 5U, 2U}, {7U, 3U, 3U}})
    CHECK(build_kernel(w1, w2, m, 2)[0] == MPoly(1));
  CHECK(build_kernel(3, 5, 2, 5) == build_kernel(5, 3, 2, 5));

  const auto r = verify_kernel_sym(3, 5, 2, 4);
  CHECK(r.equal);
  REQUIRE(r.subchecks.size() == 4);
  for (const auto& sc : r.subchecks) {
    CHECK(sc.equal);
    CHECK(side_is_zero(sc.difference));
  }
}

TEST_CASE("kernel sub-checks detect a wrong expansion") {
  // With an even weight the alternating-sum expansions no longer hold, while
  // the kernel itself is still symmetric.
  const auto r = verify_kernel_sym(2, 3, 1, 3, {.allow_even = true});
  CHECK_FALSE(r.equal);
  CHECK(side_is_zero(r.difference));
  bool some_failed = false;
  for (const auto& sc : r.subchecks) some_failed = some_failed || !sc.equal;
  CHECK(some_failed);
}

TEST_CASE("specialization chain") {
  for (unsigned w1 : {1U, 3U, 5U}) {
    for (unsigned w2 : {1U, 3U, 7U}) {
      for (unsigned n = 0; n <= 5; ++n) {
        const auto t1 = verify_thm1(w1, w2, n, 1);
        const auto t2 = verify_thm2(w1, w2, n);
        CHECK(at_y0(lhs_poly(t1)) == lhs_poly(t2));
        CHECK(at_y0(rhs_poly(t1)) == rhs_poly(t2));

        const auto t4 = verify_thm4(w1, w2, n, 1);
        const auto c5 = verify_cor5(w1, w2, n);
        CHECK(at_y0(lhs_poly(t4)) == lhs_poly(c5));
        CHECK(at_y0(rhs_poly(t4)) == rhs_poly(c5));
      }
    }
    for (unsigned n = 0; n <= 5; ++n) {
      const auto c5 = verify_cor5(w1, 1, n);
      const auto mf = verify_multformula(w1, n);
      CHECK(lhs_poly(c5) == lhs_poly(mf));
      CHECK(rhs_poly(c5) == rhs_poly(mf));
      const auto c3 = verify_cor3(w1, n);
      CHECK(lhs_poly(c3) == rhs_poly(mf));
    }
  }
}

TEST_CASE("lambda -> 0 gives the classical identities") {
  for (auto [w1, w2, n, m] : {std::tuple{3U, 5U, 4U, 2U}, {1U, 7U, 3U, 3U}, {5U, 3U, 5U, 1U}}) {
    const auto t1 = verify_thm1(w1, w2, n, m);
    CHECK(classical_limit(lhs_poly(t1)) == thm1_oracle(w1, w2, n, m, true));
    CHECK(classical_limit(rhs_poly(t1)) == thm1_oracle(w2, w1, n, m, true));
    const auto t4 = verify_thm4(w1, w2, n, m);
    CHECK(classical_limit(lhs_poly(t4)) == thm4_oracle(w1, w2, n, m, true));
    CHECK(classical_limit(rhs_poly(t4)) == thm4_oracle(w2, w1, n, m, true));
  }
}

TEST_CASE("parity hypothesis is load-bearing") {
  CHECK_THROWS_AS(verify_cor3(2, 1), ParityViolation);
  CHECK_THROWS_AS(verify_thm1(3, 4, 2, 1), ParityViolation);
  CHECK_THROWS_AS(verify_thm2(2, 3, 2), ParityViolation);
  CHECK_THROWS_AS(verify_thm4(4, 3, 2, 1), ParityViolation);
  CHECK_THROWS_AS(verify_cor5(3, 6, 2), ParityViolation);
  CHECK_THROWS_AS(verify_multformula(4, 2), ParityViolation);
  CHECK_THROWS_AS(verify_kernel_sym(2, 3, 1, 2), ParityViolation);
  CHECK_THROWS_AS(verify_thm1(3, 3, 2, 0), std::invalid_argument);
  CHECK_THROWS_AS(verify_thm1(0, 3, 2, 1, {.allow_even = true}), std::invalid_argument);

  const auto r = verify_cor3(2, 1, {.allow_even = true});
  CHECK_FALSE(r.equal);
  CHECK(lhs_poly(r) == X * Rational(2) - MPoly(q(1, 2)));
  CHECK(rhs_poly(r) == MPoly(-1));
  CHECK(std::get<MPoly>(r.difference) == X * Rational(2) + MPoly(q(1, 2)));
}

TEST_CASE("reports serialize and parse back exactly") {
  for (const auto& r : {verify_thm1(3, 5, 3, 2), verify_eq17(3, 4), verify_cor3(2, 1, {.allow_even = true}),
                        verify_kernel_sym(1, 3, 1, 3)}) {
    const auto j = Json::parse(to_json(r).dump());
    CHECK(j["identity"] == std::string(identity_name(r.params.id)));
    CHECK(j["equal"] == r.equal);
    CHECK(side_from_json(j["lhs"]) == r.lhs);
    CHECK(side_from_json(j["rhs"]) == r.rhs);
    if (!side_is_zero(r.difference)) CHECK(side_from_json(j["difference"]) == r.difference);
    CHECK(j.contains("elapsed_ms"));
  }
  const auto j = to_json(verify_thm1(3, 5, 1, 2));
  CHECK(j["params"] == Json{{"w1", 3}, {"w2", 5}, {"n", 1}, {"m", 2}});
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"identity", "params", "equal", "lhs", "rhs", "difference", "elapsed_ms"});
}

TEST_CASE("grid runs are ordered and match serial runs") {
  std::vector<IdentityParams> grid{{IdentityId::thm2, 5, 3, 4}, {IdentityId::cor3, 3, 1, 2},
                                   {IdentityId::thm2, 1, 3, 2}, {IdentityId::eq13, 1, 1, 4, 2}};
  const auto reports = verify_grid(grid, 3);
  REQUIRE(reports.size() == 4);
  for (std::size_t i = 1; i < reports.size(); ++i) CHECK(reports[i - 1].params < reports[i].params);
  for (const auto& r : reports) {
    CHECK(r.equal);
    CHECK(r.lhs == verify(r.params).lhs);
  }
  CHECK_THROWS_AS(verify_grid({{IdentityId::cor3, 2, 1, 1}}, 2), ParityViolation);
}

TEST_CASE("identity names and grids") {
  for (IdentityId id : all_identities()) CHECK(parse_identity(identity_name(id)) == id);
  CHECK_FALSE(parse_identity("thm9").has_value());
  CHECK(default_grid(IdentityId::thm1).size() == 4 * 4 * 9 * 3);
  CHECK(default_grid(IdentityId::thm2).size() == 5 * 5 * 11);
  CHECK(default_grid(IdentityId::cor3).size() == 5 * 11);
  CHECK(default_grid(IdentityId::eq13).size() == 9 * 11);
  CHECK(default_grid(IdentityId::eq17).size() == 4);
  CHECK(default_grid(IdentityId::kernel_sym).size() == 4 * 4 * 3);
}

TEST_CASE("latex statements") {
  const auto s = latex_statement({IdentityId::cor3, 3, 1, 2});
  CHECK(s.find("\\mathcal{E}_{2}\\left(3x") != std::string::npos);
  CHECK(s.find("\\tilde{S}_{j}\\left(2") != std::string::npos);
  CHECK(latex_statement({IdentityId::thm1, 3, 5, 4, 2}).find("\\frac{\\lambda}{3}") != std::string::npos);
  for (IdentityId id : all_identities()) CHECK_FALSE(latex_statement({id, 3, 5, 2, 2, 3}).empty());
}
