#include <random>
#include <set>

#include "affhecke/affweyl.hpp"
#include "affhecke/error.hpp"
#include "doctest.h"

using affhecke::AffineWeylElement;
using affhecke::AffineWeylGroup;
using affhecke::Coweight;

namespace {

// Subword property: x <= y iff some subword of a reduced word of y (with the
// same length-zero part) multiplies to x. Brute force over all 2^l subsets.
bool subword_leq(const AffineWeylGroup& g, const AffineWeylElement& x, const AffineWeylElement& y) {
  const auto rw = g.reduced_word(y);
  const int k = static_cast<int>(rw.letters.size());
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<int> sub;
    for (int j = 0; j < k; ++j)
      if ((mask >> j) & 1u) sub.push_back(rw.letters[j]);
    if (g.from_word(rw.omega, sub) == x) return true;
  }
  return false;
}

AffineWeylElement random_element(const AffineWeylGroup& g, std::mt19937& rng, int max_steps) {
  std::uniform_int_distribution<int> letter(0, g.num_simple() - 1), steps(0, max_steps);
  AffineWeylElement x = g.identity();
  const auto& d = g.datum();
  // A random length-zero-ish start from a small central translation.
  if (!d.fundamental_coweights().empty()) {
    std::uniform_int_distribution<int> shift(-1, 1);
    Coweight lam = d.zero();
    for (int i = 0; i < d.dim(); ++i) lam[i] = shift(rng);
    x = g.translation(lam);
  }
  const int n = steps(rng);
  for (int i = 0; i < n; ++i) x = g.right_mul_simple(x, letter(rng));
  return x;
}

}  // namespace

TEST_CASE("translations and lengths") {
  auto g = AffineWeylGroup::from_name("GL4");
  CHECK(g->translation(Coweight{0, 0, 0, 0}) == g->identity());
  CHECK(g->translation(Coweight{1, 1, 0, 0}).length() == 4);
  CHECK(g->mul(g->translation(Coweight{1, 0, 0, 0}), g->translation(Coweight{0, 2, 0, 0})) ==
        g->translation(Coweight{1, 2, 0, 0}));
  for (int i = 0; i < g->num_simple(); ++i) CHECK(g->simple(i).length() == 1);
  auto gl3 = AffineWeylGroup::from_name("GL3");
  CHECK(gl3->translation(Coweight{3, 1, 0}).length() == 6);
  // l(t_lam) = <lam_dom, 2 rho>
  for (const char* name : {"GL3", "GSp4", "G2"}) {
    auto h = AffineWeylGroup::from_name(name);
    const auto& d = h->datum();
    std::mt19937 rng(1);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int t = 0; t < 50; ++t) {
      Coweight lam = d.zero();
      for (int i = 0; i < d.dim(); ++i) lam[i] = c(rng);
      const Coweight dom = d.dominant_conjugate(lam);
      int two_rho = 0;
      for (int k = 0; k < d.num_positive(); ++k) two_rho += affhecke::pair(d.roots()[k], dom);
      CHECK(h->translation(lam).length() == two_rho);
    }
  }
}

TEST_CASE("group law") {
  for (const char* name : {"GL3", "GSp4", "G2"}) {
    auto g = AffineWeylGroup::from_name(name);
    std::mt19937 rng(2);
    for (int t = 0; t < 100; ++t) {
      const auto a = random_element(*g, rng, 8), b = random_element(*g, rng, 8), c = random_element(*g, rng, 8);
      CHECK(g->mul(a, g->inv(a)) == g->identity());
      CHECK(g->mul(g->mul(a, b), c) == g->mul(a, g->mul(b, c)));
      CHECK(g->inv(a).length() == a.length());
      CHECK(g->mul(a, b).length() <= a.length() + b.length());
      const auto w = g->finite(a.finite_part());
      CHECK(g->mul(g->mul(w, g->translation(b.translation())), g->inv(w)) ==
            g->translation(g->datum().weyl().act(a.finite_part(), b.translation())));
    }
  }
}

TEST_CASE("simple reflections have length one and square to one") {
  for (const char* name : {"GL2", "GL4", "GSp4", "GSp6", "G2"}) {
    auto g = AffineWeylGroup::from_name(name);
    std::mt19937 rng(3);
    for (int i = 0; i < g->num_simple(); ++i) {
      CHECK(g->mul(g->simple(i), g->simple(i)) == g->identity());
    }
    for (int t = 0; t < 100; ++t) {
      const auto x = random_element(*g, rng, 10);
      for (int i = 0; i < g->num_simple(); ++i) {
        CHECK(std::abs(g->right_mul_simple(x, i).length() - x.length()) == 1);
        CHECK(g->right_mul_simple(x, i) == g->mul(x, g->simple(i)));
        CHECK(g->left_mul_simple(i, x) == g->mul(g->simple(i), x));
      }
    }
  }
}

TEST_CASE("reduced words") {
  for (const char* name : {"GL3", "GSp4", "G2"}) {
    auto g = AffineWeylGroup::from_name(name);
    CHECK(g->reduced_word(g->identity()).letters.empty());
    std::mt19937 rng(4);
    for (int t = 0; t < 100; ++t) {
      const auto x = random_element(*g, rng, 12);
      const auto rw = g->reduced_word(x);
      CHECK(static_cast<int>(rw.letters.size()) == x.length());
      CHECK(rw.omega.length() == 0);
      CHECK(g->from_word(rw.omega, rw.letters) == x);
    }
  }
}

TEST_CASE("Bruhat order agrees with the subword property") {
  for (const char* name : {"GL3", "GSp4", "G2"}) {
    auto g = AffineWeylGroup::from_name(name);
    const auto elems = g->ball(5, g->identity());
    int agree = 0;
    for (const auto& x : elems)
      for (const auto& y : elems) {
        const bool le = g->bruhat_leq(x, y);
        CHECK(le == subword_leq(*g, x, y));
        if (le && x.length() == y.length()) CHECK(x == y);
        ++agree;
      }
    CHECK(agree > 100);
    for (int i = 1; i < g->num_simple(); ++i) CHECK(g->bruhat_leq(g->identity(), g->simple(i)));
  }
}

TEST_CASE("Bruhat poset matches pairwise comparisons") {
  auto g = AffineWeylGroup::from_name("GSp4");
  const auto adm = g->adm(Coweight{1, 1, 1});
  affhecke::BruhatPoset poset(*g, adm);
  for (int i = 0; i < poset.size(); ++i)
    for (int j = 0; j < poset.size(); ++j) CHECK(poset.leq(i, j) == g->bruhat_leq(poset[i], poset[j]));
}

TEST_CASE("admissible set sizes") {
  struct Case {
    const char* group;
    const char* mu;
    std::size_t size;
  };
  const Case cases[] = {
      {"GL2", "1,0", 3},       {"GL4", "1,1,0,0", 33},       {"GL5", "1,1,0,0,0", 131}, {"GL3", "2,2,0", 19},
      {"GL3", "3,1,0", 49},    {"GL4", "2,0,0,0", 65},       {"GL4", "2,1,0,0", 143},   {"GSp4", "1,1,0,0", 13},
      {"GSp6", "1,1,1,0,0,0", 79}, {"G2", "2,1,0", 41},
  };
  for (const auto& c : cases) {
    auto g = AffineWeylGroup::from_name(c.group);
    const Coweight mu = g->datum().parse_coweight(c.mu);
    const auto adm = g->adm(mu);
    CAPTURE(c.group);
    CAPTURE(c.mu);
    CHECK(adm.size() == c.size);
    // Extreme elements are exactly the translations t_lam, lam in W mu.
    const int top = g->translation(mu).length();
    std::set<Coweight> tops;
    for (const auto& x : adm) {
      CHECK(x.length() <= top);
      if (x.length() == top) {
        CHECK(x.finite_part() == 0);
        tops.insert(x.translation());
      }
    }
    CHECK(tops.size() == g->datum().weyl_orbit(mu).size());
  }
  CHECK_THROWS_AS(AffineWeylGroup::from_name("GL3")->adm(Coweight{0, 1, 0}), affhecke::NotDominant);
}

TEST_CASE("minimal coset representatives") {
  auto g = AffineWeylGroup::from_name("GL4");
  CHECK(g->is_minimal_coset(g->identity()));
  for (int i = 1; i < g->num_simple(); ++i) CHECK_FALSE(g->is_minimal_coset(g->simple(i)));
  // Minimal representatives of W/W_mu, mu = (1,1,0,0), have length
  // distribution given by the Gaussian binomial [4 choose 2]_q.
  const auto& W = g->datum().weyl();
  std::vector<int> counts(5, 0);
  for (int w = 0; w < W.size(); ++w) {
    const auto x = g->finite(w);
    bool minimal = true;
    // Stabilizer of (1,1,0,0) is generated by s1 and s3.
    for (int i : {1, 3})
      if (g->is_right_descent(x, i)) minimal = false;
    if (minimal) ++counts[x.length()];
  }
  CHECK(counts == std::vector<int>{1, 1, 2, 1, 1});
}

TEST_CASE("element encoding") {
  auto g = AffineWeylGroup::from_name("GL4");
  const auto x = g->mul(g->translation(Coweight{1, 0, 0, 0}), g->finite(g->datum().weyl().from_word(std::vector<int>{1, 2})));
  CHECK(g->encode(x) == "t[1,0,0,0]*w[s1.s2]");
  CHECK(g->decode("t[1,0,0,0]*w[s1.s2]") == x);
  CHECK(g->decode("t[0,0,0,0]*w[]") == g->identity());
  CHECK(g->encode(g->identity()) == "t[0,0,0,0]*w[]");
  CHECK_THROWS_AS(g->decode("t[1,0,0]*w[]"), affhecke::DimensionMismatch);
  CHECK_THROWS_AS(g->decode("t[1,0,0,0]*w[s7]"), affhecke::ParseError);
  CHECK_THROWS_AS(g->decode("garbage"), affhecke::ParseError);
  std::mt19937 rng(9);
  for (int t = 0; t < 100; ++t) {
    const auto y = random_element(*g, rng, 10);
    CHECK(g->decode(g->encode(y)) == y);
  }
  auto other = AffineWeylGroup::from_name("GL3");
  CHECK_THROWS_AS(g->mul(x, other->identity()), affhecke::DatumMismatch);
}
