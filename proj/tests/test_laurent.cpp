#include <random>

#include "affhecke/error.hpp"
#include "affhecke/laurent.hpp"
#include "doctest.h"

using affhecke::LaurentPoly;
using affhecke::QPolynomial;

namespace {

LaurentPoly v(int e) { return LaurentPoly::v_power(e); }

LaurentPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> exp_dist(-6, 6), coeff_dist(-5, 5), len_dist(0, 5);
  LaurentPoly p;
  const int n = len_dist(rng);
  for (int i = 0; i < n; ++i) p += LaurentPoly::monomial(coeff_dist(rng), exp_dist(rng));
  return p;
}

}  // namespace

TEST_CASE("multiplication") {
  CHECK((v(1) + v(-1)) * (v(1) - v(-1)) == v(2) - v(-2));
  CHECK((LaurentPoly() * (v(3) + 7)).is_zero());
  const LaurentPoly one_minus_q = LaurentPoly(1) - LaurentPoly::q_power(1);
  CHECK(one_minus_q * one_minus_q == LaurentPoly(1) - LaurentPoly::monomial(2, 2) + v(4));
}

TEST_CASE("zero coefficients are never stored") {
  LaurentPoly p = v(2) + v(5);
  p -= v(5);
  CHECK(p == v(2));
  CHECK(p.max_exp() == 2);
  p -= v(2);
  CHECK(p.is_zero());
  CHECK(p == LaurentPoly());
}

TEST_CASE("bar involution") {
  CHECK((v(2) - 1).bar() == v(-2) - 1);
  CHECK(LaurentPoly::big_q().bar() == -LaurentPoly::big_q());
  std::mt19937 rng(7);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng);
    CHECK(a.bar().bar() == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK((a + b).bar() == a.bar() + b.bar());
  }
}

TEST_CASE("ring axioms on random inputs") {
  std::mt19937 rng(11);
  for (int i = 0; i < 200; ++i) {
    const LaurentPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly());
  }
}

TEST_CASE("coefficients do not overflow") {
  LaurentPoly p = v(0) + v(1);
  LaurentPoly acc(1);
  for (int i = 0; i < 100; ++i) acc *= p;
  // Central binomial coefficient C(100, 50).
  CHECK(acc.coeff(50) == mpz_class("100891344545564193334812497256"));
  CHECK(acc.eval_at_one() == mpz_class(1) << 100);
}

TEST_CASE("encoding round trip") {
  const LaurentPoly p = LaurentPoly(1) - LaurentPoly::monomial(2, 2) + v(4);
  CHECK(p.encode() == "1*v^0+-2*v^2+1*v^4");
  CHECK(LaurentPoly::decode(p.encode()) == p);
  CHECK(LaurentPoly().encode() == "0");
  CHECK(LaurentPoly::decode("0").is_zero());
  CHECK(LaurentPoly::decode("-3*v^-5+12*v^-1") == LaurentPoly::monomial(-3, -5) + LaurentPoly::monomial(12, -1));
  CHECK_THROWS_AS(LaurentPoly::decode("1*v^2+1*v^0"), affhecke::ParseError);
  CHECK_THROWS_AS(LaurentPoly::decode("x"), affhecke::ParseError);
  CHECK_THROWS_AS(LaurentPoly::decode("0*v^1"), affhecke::ParseError);
  std::mt19937 rng(3);
  for (int i = 0; i < 100; ++i) {
    const LaurentPoly a = random_poly(rng);
    CHECK(LaurentPoly::decode(a.encode()) == a);
  }
}

TEST_CASE("pretty printing") {
  CHECK((LaurentPoly(1) + LaurentPoly::q_power(1) + LaurentPoly::monomial(2, 4)).pretty() == "1 + q + 2q^2");
  CHECK(LaurentPoly::big_q().pretty() == "v^-1 - v");
}

TEST_CASE("evaluation") {
  const LaurentPoly f = LaurentPoly(1) + LaurentPoly::q_power(1) + LaurentPoly::q_power(2);
  CHECK(f.eval_at_one() == 3);
  CHECK(f.eval_v(mpq_class(1)) == 3);
  CHECK(LaurentPoly().eval_v(mpq_class(5, 3)) == 0);
  CHECK(LaurentPoly::big_q().eval_at_one() == 0);
  CHECK(LaurentPoly::big_q().eval_v(mpq_class(2)) == mpq_class(-3, 2));
  CHECK(v(-2).eval_v(mpq_class(1, 3)) == 9);
  CHECK_THROWS_AS(f.eval_v(mpq_class(0)), affhecke::ZeroEvaluationPoint);
}

TEST_CASE("expansion in Q") {
  const LaurentPoly one = 1, q = LaurentPoly::q_power(1);
  QPolynomial r = affhecke::q_expand(one - q, 1);
  CHECK(r.coeffs == std::vector<mpz_class>{0, 1});
  r = affhecke::q_expand(one - 2 * q + q * q, 2);
  CHECK(r.coeffs == std::vector<mpz_class>{0, 0, 1});
  CHECK_THROWS_AS(affhecke::q_expand(one + q, 1), affhecke::NotExpandable);
  CHECK(affhecke::q_expand(LaurentPoly(), 3).is_zero());

  // Re-expansion reproduces f for random integral R.
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coeff(-4, 4), deg(0, 6), alpha(-4, 8);
  for (int i = 0; i < 100; ++i) {
    QPolynomial in;
    in.coeffs.resize(deg(rng) + 1);
    for (auto& c : in.coeffs) c = coeff(rng);
    while (!in.coeffs.empty() && in.coeffs.back() == 0) in.coeffs.pop_back();
    const int a = alpha(rng);
    const LaurentPoly f = in.to_laurent().shifted(a);
    const QPolynomial out = affhecke::q_expand(f, a);
    CHECK(out == in);
    CHECK(out.to_laurent().shifted(a) == f);
  }
}
