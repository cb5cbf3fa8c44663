#include <random>

#include "affhecke/central.hpp"
#include "affhecke/error.hpp"
#include "affhecke/wakimoto.hpp"
#include "doctest.h"

using namespace affhecke;

namespace {

// Coefficient of T~_x in h, i.e. v^{l(x)} times the T_x coefficient.
LaurentPoly tilde_coeff(const HeckeElement& h, const AffineWeylElement& x) {
  return h.coeff(x) * LaurentPoly::v_power(x.length());
}

// Reduced word built by stripping the largest-index right descent, which
// usually differs from the canonical one.
std::vector<int> other_reduced_word(const AffineWeylGroup& g, AffineWeylElement w) {
  std::vector<int> word;
  while (w.length() > 0) {
    for (int i = g.num_simple() - 1; i >= 0; --i) {
      if (g.is_right_descent(w, i)) {
        word.push_back(i);
        w = g.right_mul_simple(w, i);
        break;
      }
    }
  }
  return {word.rbegin(), word.rend()};
}

}  // namespace

TEST_CASE("distinguished subexpressions: single letter") {
  auto g = AffineWeylGroup::from_name("GL3");
  const auto e = g->identity();
  const auto s = g->simple(1);
  auto up = distinguished_subexpressions(e, s, s);
  REQUIRE(up.size() == 1);
  CHECK(up[0].sigma == std::vector<AffineWeylElement>{e, s});
  CHECK(up[0].n_stat == 0);
  auto stay = distinguished_subexpressions(e, s, e);
  REQUIRE(stay.size() == 1);
  CHECK(stay[0].sigma == std::vector<AffineWeylElement>{e, e});
  CHECK(stay[0].n_stat == 1);
  CHECK(distinguished_subexpressions(e, s, g->simple(2)).empty());
  CHECK(wakimoto_r_poly(e, s, s) == QPolynomial{{1}});
  CHECK(wakimoto_r_poly(e, s, e) == QPolynomial{{0, 1}});
  CHECK(wakimoto_r_poly(e, e, e) == QPolynomial{{1}});
  // Going down from s is forced.
  auto down = distinguished_subexpressions(s, s, e);
  REQUIRE(down.size() == 1);
  CHECK(down[0].m_stat == 1);
}

TEST_CASE("distinguished subexpressions: length formula") {
  auto g = AffineWeylGroup::from_name("GSp4");
  const auto elems = g->ball(4, g->identity());
  std::mt19937 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  for (int k = 0; k < 40; ++k) {
    const auto& v = elems[pick(rng)];
    const auto& w = elems[pick(rng)];
    const HeckeElement h = wakimoto_function(v, w).tilde_product;
    for (const auto& [x, c] : h.terms()) {
      for (const auto& sub : distinguished_subexpressions(v, w, x)) {
        CHECK(x.length() == v.length() + w.length() - sub.n_stat - 2 * sub.m_stat);
        CHECK(sub.sigma.size() == sub.base_word.size() + 1);
      }
    }
  }
}

TEST_CASE("Wakimoto function examples") {
  auto g = AffineWeylGroup::from_name("GL3");
  const auto e = g->identity();
  const auto s = g->simple(0);
  const auto v = g->from_word(e, {0, 1, 2});
  CHECK(wakimoto_function(v, e).tilde_product == HeckeElement::T_tilde(v));
  HeckeElement expected = HeckeElement::T_tilde(s);
  expected += HeckeElement::T(e, LaurentPoly::big_q());
  CHECK(wakimoto_function(e, s).tilde_product == expected);
  const auto tau = g->reduced_word(g->translation(Coweight{1, 0, 0})).omega;
  CHECK_THROWS_AS(wakimoto_r_poly(e, tau, tau), NotInAffineWeylGroup);
}

TEST_CASE("closed form equals the Hecke product") {
  for (const char* name : {"GL3", "GSp4"}) {
    CAPTURE(name);
    auto g = AffineWeylGroup::from_name(name);
    const auto elems = g->ball(name == std::string("GL3") ? 8 : 6, g->identity());
    const int bound = name == std::string("GL3") ? 8 : 6;
    for (const auto& v : elems) {
      for (const auto& w : elems) {
        if (v.length() + w.length() > bound) continue;
        const HeckeElement h = wakimoto_function(v, w).tilde_product;
        const int parity = (v.length() + w.length()) % 2;
        for (const auto& [x, c] : h.terms()) {
          const QPolynomial r = wakimoto_r_poly(v, w, x);
          CHECK(r.to_laurent() == tilde_coeff(h, x));
          CHECK(r.has_nonnegative_coeffs());
          CHECK(r.exponents_have_parity((parity + x.length()) % 2));
        }
        // Nothing outside the support has a distinguished subexpression.
        CHECK(wakimoto_r_poly(v, w, g->mul(v, w)).to_laurent() == tilde_coeff(h, g->mul(v, w)));
      }
    }
  }
}

TEST_CASE("closed form is independent of the reduced word") {
  auto g = AffineWeylGroup::from_name("GL3");
  const auto elems = g->ball(5, g->identity());
  std::mt19937 rng(9);
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  int differing = 0;
  for (int k = 0; k < 60; ++k) {
    const auto& v = elems[pick(rng)];
    const auto& w = elems[pick(rng)];
    const auto word = other_reduced_word(*g, w);
    if (word != g->reduced_word(w).letters) ++differing;
    const HeckeElement h = wakimoto_function(v, w).tilde_product;
    for (const auto& [x, c] : h.terms()) {
      std::vector<mpz_class> by_n;
      for (const auto& sub : distinguished_subexpressions(v, word, x)) {
        if (static_cast<int>(by_n.size()) <= sub.n_stat) by_n.resize(sub.n_stat + 1);
        by_n[sub.n_stat] += 1;
      }
      CHECK(QPolynomial{by_n} == wakimoto_r_poly(v, w, x));
    }
  }
  CHECK(differing > 10);
}

TEST_CASE("Wakimoto functions satisfy property P") {
  for (const char* name : {"GL3", "GSp4", "G2"}) {
    auto g = AffineWeylGroup::from_name(name);
    const auto elems = g->ball(4, g->identity());
    std::mt19937 rng(2);
    std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
    const auto tau = g->omega_part(g->translation(g->datum().fundamental_coweights()[0]));
    for (int k = 0; k < 25; ++k) {
      auto v = elems[pick(rng)];
      auto w = elems[pick(rng)];
      if (k % 3 == 0) v = g->mul(tau, v);
      if (k % 4 == 0) w = g->mul(w, tau);
      const HeckeElement f = wakimoto_function(v, w).normalized;
      const int d = v.length() + w.length();
      CHECK(satisfies_property_P(f, d));
      if (d > 0) CHECK_FALSE(satisfies_property_P(f, d + 1));
      // Its dual eps_v eps_w q_w^{-1} T_{v^{-1}}^{-1} T_w satisfies (P) for -d.
      HeckeElement dual = HeckeElement::T_inverse(g->inv(v)) * HeckeElement::T(w);
      dual *= LaurentPoly::monomial(d % 2 ? -1 : 1, -2 * w.length());
      CHECK(dual == f.bar());
      CHECK(satisfies_property_P(dual, -d));
    }
  }
}

TEST_CASE("alcove walk expression of theta") {
  for (const char* name : {"GL3", "GL4", "GSp4", "G2"}) {
    CAPTURE(name);
    auto g = AffineWeylGroup::from_name(name);
    const auto& rd = g->datum();
    std::mt19937 rng(4);
    std::uniform_int_distribution<int> coord(-2, 2);
    for (int k = 0; k < 15; ++k) {
      Coweight lam = rd.zero();
      for (int i = 0; i < rd.dim(); ++i) lam[i] = coord(rng);
      const auto factors = theta_alcove_walk(*g, lam);
      CHECK(expand_factors(*g, factors) == theta(*g, lam));
      if (rd.is_dominant(lam)) {
        for (const auto& f : factors) CHECK(f.exponent == 1);
      }
    }
  }
}

TEST_CASE("minimal expression degree bound") {
  auto gl3 = AffineWeylGroup::from_name("GL3");
  const auto t = gl3->translation(Coweight{2, 1, 0});
  CHECK(minimal_expression_degree_check(*gl3, {{t, 1}}));
  for (int n = 3; n <= 5; ++n) {
    auto g = AffineWeylGroup::from_name("GL" + std::to_string(n));
    Coweight mu = g->datum().zero();
    mu[0] = mu[1] = 1;
    for (const Coweight& lam : g->datum().weyl_orbit(mu)) {
      CHECK(minimal_expression_degree_check(*g, theta_alcove_walk(*g, lam)));
    }
  }
  const auto s = gl3->simple(1);
  CHECK_THROWS_AS(minimal_expression_degree_check(*gl3, {{s, 1}, {s, -1}}), NotMinimal);
  CHECK_THROWS_AS(expand_factors(*gl3, {{s, 2}}), InvalidInput);
}

TEST_CASE("theta at q = 1 in the C'' basis") {
  struct Case {
    const char* name;
    Coweight mu;
  };
  for (const Case& c : {Case{"GL2", {1, 0}}, Case{"GL2", {2, 0}}, Case{"GL3", {1, 1, 0}}}) {
    auto g = AffineWeylGroup::from_name(c.name);
    KLEngine engine(g);
    for (const Coweight& lam : g->datum().weyl_orbit(c.mu)) {
      const auto t = g->translation(lam);
      HeckeElement h = theta(*g, lam);
      h *= LaurentPoly::monomial(t.sign(), t.length());
      const auto coeffs = to_c_basis(h, engine);
      const auto interval = g->lower_interval(t);
      CHECK(coeffs.size() == interval.size());
      for (const auto& w : interval) {
        auto it = coeffs.find(w);
        REQUIRE(it != coeffs.end());
        CHECK(it->second.eval_at_one() == engine.Q(w, t).eval_at_one());
      }
    }
  }
}
