#include <random>

#include "affhecke/central.hpp"
#include "affhecke/error.hpp"
#include "doctest.h"

using namespace affhecke;

namespace {

Coweight random_coweight(const RootDatum& rd, std::mt19937& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Coweight c = rd.zero();
  for (int i = 0; i < rd.dim(); ++i) c[i] = d(rng);
  return c;
}

Coweight random_dominant(const RootDatum& rd, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, 2);
  Coweight c = rd.zero();
  for (const auto& f : rd.fundamental_coweights()) c += d(rng) * f;
  return c;
}

// The length-zero elements obtained from translations by fundamental coweights.
std::vector<AffineWeylElement> some_length_zero(const AffineWeylGroup& g) {
  std::vector<AffineWeylElement> out;
  for (const auto& f : g.datum().fundamental_coweights()) out.push_back(g.omega_part(g.translation(f)));
  return out;
}

}  // namespace

TEST_CASE("theta decomposition is dominant") {
  for (const char* name : {"GL4", "GSp4", "G2"}) {
    const auto& rd = *RootDatum::from_name(name);
    std::mt19937 rng(7);
    for (int k = 0; k < 30; ++k) {
      const Coweight lam = random_coweight(rd, rng, 3);
      const auto [a, b] = theta_decomposition(rd, lam);
      CHECK(rd.is_dominant(a));
      CHECK(rd.is_dominant(b));
      CHECK(a - b == lam);
    }
  }
}

TEST_CASE("theta of dominant and zero coweights") {
  auto g = AffineWeylGroup::from_name("GL3");
  CHECK(theta(*g, Coweight{0, 0, 0}) == HeckeElement::T(g->identity()));
  const Coweight lam{2, 1, 0};
  const auto t = g->translation(lam);
  CHECK(theta(*g, lam) == HeckeElement::T_tilde(t));
  CHECK(theta(*g, lam) == HeckeElement::T(t, LaurentPoly::v_power(-t.length())));
  CHECK_THROWS_AS(theta(*g, Coweight{0, 1, 0}, Coweight{0, 0, 0}), NotDominant);
}

TEST_CASE("GL2 theta from two decompositions") {
  auto g = AffineWeylGroup::from_name("GL2");
  const HeckeElement a = theta(*g, Coweight{1, 1}, Coweight{1, 0});
  const HeckeElement b = theta(*g, Coweight{2, 1}, Coweight{2, 0});
  CHECK(a == b);
  CHECK(a == theta(*g, Coweight{0, 1}));
  // Theta_{(0,1)} = T~_{t(1,1)} T~_{t(1,0)}^{-1} has two terms.
  CHECK(a.size() == 2);
}

TEST_CASE("theta is independent of the decomposition") {
  for (const char* name : {"GL3", "GSp4", "G2"}) {
    auto g = AffineWeylGroup::from_name(name);
    const auto& rd = g->datum();
    std::mt19937 rng(11);
    for (int k = 0; k < 20; ++k) {
      const Coweight lam = random_coweight(rd, rng, 1);
      const auto [a, b] = theta_decomposition(rd, lam);
      const Coweight shift = random_dominant(rd, rng);
      CHECK(theta(*g, lam) == theta(*g, a + shift, b + shift));
    }
  }
}

TEST_CASE("theta is multiplicative on the dominant cone") {
  for (const char* name : {"GL3", "GSp4", "G2"}) {
    auto g = AffineWeylGroup::from_name(name);
    std::mt19937 rng(3);
    for (int k = 0; k < 6; ++k) {
      const Coweight a = random_dominant(g->datum(), rng);
      const Coweight b = random_dominant(g->datum(), rng);
      CHECK(theta(*g, a + b) == theta(*g, a) * theta(*g, b));
    }
  }
}

TEST_CASE("theta functions commute") {
  auto g = AffineWeylGroup::from_name("GL3");
  const HeckeElement a = theta(*g, Coweight{0, 1, 0});
  const HeckeElement b = theta(*g, Coweight{0, 0, 1});
  CHECK(a * b == b * a);
  CHECK(a * b == theta(*g, Coweight{0, 1, 1}));
}

TEST_CASE("z is central") {
  struct Case {
    const char* name;
    Coweight lam;
  };
  for (const Case& c : {Case{"GL2", {1, 0}}, Case{"GL3", {1, 0, 0}}, Case{"GL3", {1, 1, 0}}, Case{"GL3", {2, 0, 0}},
                        Case{"GSp4", {1, 1, 1}}, Case{"G2", {0, 1}}}) {
    auto g = AffineWeylGroup::from_name(c.name);
    const HeckeElement z = central_z(*g, c.lam);
    for (int s = 0; s < g->num_simple(); ++s) {
      const HeckeElement ts = HeckeElement::T(g->simple(s));
      CHECK(z * ts == ts * z);
    }
    for (const auto& w : some_length_zero(*g)) {
      const HeckeElement tw = HeckeElement::T(w);
      CHECK(z * tw == tw * z);
    }
  }
  auto g = AffineWeylGroup::from_name("GL3");
  CHECK(central_z(*g, Coweight{0, 0, 0}) == HeckeElement::T(g->identity()));
  CHECK_THROWS_AS(central_z(*g, Coweight{0, 1, 0}), NotDominant);
  CHECK(central_z(*g, Coweight{2, 1, 0}, 4) == central_z(*g, Coweight{2, 1, 0}, 1));
}

TEST_CASE("Drinfeld case coefficients") {
  for (int n = 2; n <= 4; ++n) {
    auto g = AffineWeylGroup::from_name("GL" + std::to_string(n));
    Coweight mu = g->datum().zero();
    mu[0] = 1;
    const auto t_mu = g->translation(mu);
    const HeckeElement f = kottwitz_function(*g, mu);
    const auto adm = g->adm(mu);
    CHECK(f.size() == adm.size());
    const LaurentPoly one_minus_q = LaurentPoly(1) - LaurentPoly::q_power(1);
    for (const auto& x : adm) {
      LaurentPoly expected(t_mu.sign());
      for (int k = 0; k < t_mu.length() - x.length(); ++k) expected *= one_minus_q;
      CHECK(f.coeff(x) == expected);
    }
  }
}

TEST_CASE("Kottwitz function: support, positivity, property P") {
  struct Case {
    const char* name;
    Coweight mu;
  };
  for (const Case& c : {Case{"GL2", {2, 0}}, Case{"GL3", {1, 1, 0}}, Case{"GL3", {2, 1, 0}}, Case{"GL3", {2, 2, 0}},
                        Case{"GSp4", {1, 1, 1}}, Case{"G2", {0, 1}}}) {
    CAPTURE(c.name);
    auto g = AffineWeylGroup::from_name(c.name);
    const HeckeElement f = kottwitz_function(*g, c.mu);
    const auto adm = g->adm(c.mu);
    CHECK(f.size() == adm.size());
    for (const auto& x : adm) CHECK(!f.coeff(x).is_zero());
    CHECK(kottwitz_coefficients_positive(f, c.mu));
    const int d = g->translation(c.mu).length();
    CHECK(satisfies_property_P(f, d));
    CHECK(satisfies_self_dual_P(f, d));
    CHECK_FALSE(satisfies_property_P(f, d + 1));
  }
}

TEST_CASE("minuscule Kottwitz function is a multiple of z") {
  auto g = AffineWeylGroup::from_name("GL4");
  const Coweight mu{1, 1, 0, 0};
  const int l = g->translation(mu).length();
  HeckeElement expected = central_z(*g, mu);
  expected *= LaurentPoly::monomial(l % 2 ? -1 : 1, l);
  CHECK(kottwitz_function(*g, mu, 2) == expected);
}

TEST_CASE("standard objects satisfy property P") {
  for (const char* name : {"GL3", "GSp4"}) {
    auto g = AffineWeylGroup::from_name(name);
    for (const auto& y : g->ball(4, g->identity())) {
      const HeckeElement f = HeckeElement::T(y, LaurentPoly(y.sign()));
      CHECK(satisfies_property_P(f, y.length()));
      // The dual satisfies it for -d.
      CHECK(satisfies_property_P(f.bar(), -y.length()));
      if (y.length() > 0) CHECK_FALSE(satisfies_property_P(f, y.length() + 2));
    }
  }
}

TEST_CASE("duality for property P") {
  auto g = AffineWeylGroup::from_name("GL3");
  std::mt19937 rng(5);
  const auto elems = g->ball(4, g->identity());
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  for (int k = 0; k < 30; ++k) {
    const auto& a = elems[pick(rng)];
    const auto& b = elems[pick(rng)];
    HeckeElement f = HeckeElement::T(a, LaurentPoly(a.sign())) * HeckeElement::T_inverse(b);
    f *= LaurentPoly::q_power(b.length()) * LaurentPoly(b.sign());
    for (int d = -6; d <= 6; ++d) CHECK(satisfies_property_P(f, d) == satisfies_property_P(f.bar(), -d));
    HeckeElement h = f + HeckeElement::T(g->identity(), LaurentPoly::q_power(1));
    for (int d = -6; d <= 6; ++d) CHECK(satisfies_property_P(h, d) == satisfies_property_P(h.bar(), -d));
  }
}
