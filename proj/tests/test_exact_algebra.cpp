#include <doctest.h>

#include <random>

#include "degen/mpoly.hpp"
#include "oracles.hpp"
#include "printing.hpp"

using namespace degen;
using degen::Json;

namespace {
const MPoly X = MPoly::x();
const MPoly Y = MPoly::y();
const MPoly L = MPoly::lambda();
Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }
}  // namespace

TEST_CASE("rational normalization") {
  CHECK(q(2, 4) == q(1, 2));
  CHECK(q(3, -6).num() == -1);
  CHECK(q(3, -6).den() == 2);
  CHECK(q(0, -5).den() == 1);
  CHECK(Rational::parse("-6/4") == q(-3, 2));
  CHECK(Rational::parse(" 7 ") == Rational(7));
  CHECK(Rational::parse("-6/4").to_string() == "-3/2");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1/x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("poly_add examples") {
  CHECK((X * X - L * X) + (L * X) == X * X);
  const MPoly p = X * X - L * X + MPoly(q(3, 7));
  CHECK(p + MPoly() == p);
  CHECK((X - MPoly(q(1, 2))) + (-X) == MPoly(q(-1, 2)));
  CHECK(((X - X)).is_zero());
  CHECK((X - X).terms().empty());
}

TEST_CASE("poly_mul examples") {
  CHECK(X * (X - L) == X * X - L * X);
  const MPoly p = X * Y + L * Rational(5);
  CHECK(p * MPoly(Rational(1)) == p);
  CHECK((X - MPoly(1)) * (X + MPoly(1)) == X * X - MPoly(1));
  CHECK((p * MPoly()).is_zero());
}

TEST_CASE("poly_subst examples") {
  CHECK(subst(X - MPoly(q(1, 2)), Var::x, X * Rational(3)) == X * Rational(3) - MPoly(q(1, 2)));
  // E_2(x|L) = x^2 - (1+L)x + L/2 at L = 0 is the classical x^2 - x.
  const MPoly e2 = X * X - (MPoly(1) + L) * X + L * q(1, 2);
  CHECK(subst(e2, Var::lambda, MPoly()) == X * X - X);
  CHECK(subst(L * X, Var::lambda, L * q(1, 3)) == L * X * q(1, 3));
  CHECK(scale_var(e2, Var::lambda, q(1, 3)) == subst(e2, Var::lambda, L * q(1, 3)));
  CHECK(subst(pow(X + Y, 2), Var::y, MPoly(2)) == X * X + X * Rational(4) + MPoly(4));
}

TEST_CASE("poly_eval examples") {
  CHECK(eval(X * X - L * X, 3, 0, 2) == Rational(3));
  CHECK(eval(MPoly(), q(1, 2), 7, 9) == Rational(0));
  CHECK(eval(X - MPoly(q(1, 2)), 1, 0, 0) == q(1, 2));
}

TEST_CASE("queries") {
  const MPoly p = X * X * L + Y * Rational(3) + MPoly(q(-1, 2));
  CHECK(p.total_degree() == 3);
  CHECK(p.degree(Var::y) == 1);
  CHECK(p.coefficient(Exponent{{0, 1, 0}}) == Rational(3));
  CHECK(p.coefficient(Exponent{{5, 0, 0}}) == Rational(0));
  CHECK_FALSE(p.constant_value().has_value());
  CHECK(MPoly(q(2, 3)).constant_value() == q(2, 3));
  CHECK(MPoly().constant_value() == Rational(0));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937 rng(20261017);
  for (int trial = 0; trial < 60; ++trial) {
    const MPoly a = oracle::random_poly(rng), b = oracle::random_poly(rng), c = oracle::random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    const MPoly product = a * b;
    for (const auto& [e, coeff] : product.terms()) CHECK_FALSE(coeff.is_zero());
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const MPoly a = oracle::random_poly(rng), b = oracle::random_poly(rng);
    const Rational x0 = oracle::random_rational(rng), y0 = oracle::random_rational(rng),
                   l0 = oracle::random_rational(rng);
    CHECK(eval(a * b, x0, y0, l0) == eval(a, x0, y0, l0) * eval(b, x0, y0, l0));
    CHECK(eval(a + b, x0, y0, l0) == eval(a, x0, y0, l0) + eval(b, x0, y0, l0));
  }
}

TEST_CASE("lambda rescaling composes") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const MPoly p = oracle::random_poly(rng);
    const Rational c = oracle::random_rational(rng), d = oracle::random_rational(rng);
    CHECK(subst(subst(p, Var::lambda, L * c), Var::lambda, L * d) == subst(p, Var::lambda, L * (c * d)));
  }
}

TEST_CASE("substitution agrees with evaluation") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const MPoly p = oracle::random_poly(rng), r = oracle::random_poly(rng, 3, 2);
    const Rational x0 = oracle::random_rational(rng), y0 = oracle::random_rational(rng),
                   l0 = oracle::random_rational(rng);
    CHECK(eval(subst(p, Var::x, r), x0, y0, l0) == eval(p, eval(r, x0, y0, l0), y0, l0));
  }
}

TEST_CASE("text format") {
  const MPoly e2 = X * X - (MPoly(1) + L) * X + L * q(1, 2);
  CHECK(to_string(e2) == "x^2 - x*L - x + 1/2*L");
  CHECK(to_string(MPoly()) == "0");
  CHECK(to_string(MPoly(q(-1, 2))) == "-1/2");
  CHECK(to_string(X * Y * L * Rational(-3)) == "-3*x*y*L");
  CHECK(to_latex(e2) == "x^{2} - x\\lambda - x + \\frac{1}{2}\\lambda");
  CHECK(parse_poly("x^2 - (1+L)x + L/2") == e2);
  CHECK(parse_poly("lambda*(x - 2)^2") == L * pow(X - MPoly(2), 2));
  CHECK(parse_poly("-3/4") == MPoly(q(-3, 4)));
  CHECK_THROWS_AS(parse_poly("x + z"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("1/x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_poly("(x + 1"), std::invalid_argument);
}

TEST_CASE("text and json round trip") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const MPoly p = oracle::random_poly(rng, 8, 4);
    CHECK(parse_poly(to_string(p)) == p);
    CHECK(mpoly_from_json(to_json(p)) == p);
    CHECK(mpoly_from_json(Json::parse(to_json(p).dump())) == p);
  }
}

TEST_CASE("json layout") {
  const auto j = to_json(X * X * Rational(2) - L * q(1, 2));
  REQUIRE(j.size() == 2);
  CHECK(j[0]["e"] == Json::array({2, 0, 0}));
  CHECK(j[0]["n"] == "2");
  CHECK(j[0]["d"] == "1");
  CHECK(j[1]["e"] == Json::array({0, 0, 1}));
  CHECK(j[1]["n"] == "-1");
  CHECK(j[1]["d"] == "2");
}
