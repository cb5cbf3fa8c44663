#include "affhecke/checks.hpp"

#include <random>

#include "affhecke/central.hpp"
#include "affhecke/wakimoto.hpp"

namespace affhecke {

namespace {

void fail(CheckResult& r, const std::string& detail) {
  if (r.passed) r.detail = detail;
  r.passed = false;
}

// Uniform choice among elements of a sorted ball with l(v) + l(w) <= max_total.
std::pair<AffineWeylElement, AffineWeylElement> random_pair(const std::vector<AffineWeylElement>& elems,
                                                            std::mt19937_64& rng, int max_total) {
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  while (true) {
    const auto& v = elems[pick(rng)];
    const auto& w = elems[pick(rng)];
    if (v.length() + w.length() <= max_total) return {v, w};
  }
}

Coweight random_coweight(const RootDatum& rd, std::mt19937_64& rng, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Coweight c = rd.zero();
  for (int i = 0; i < rd.dim(); ++i) c[i] = d(rng);
  return c;
}

LaurentPoly signed_q_power(int parity, int q_exp) { return LaurentPoly::monomial(parity % 2 ? -1 : 1, 2 * q_exp); }

}  // namespace

CheckResult check_r_polynomials(KLEngine& engine, int max_length) {
  const AffineWeylGroup& g = engine.group();
  CheckResult r{"R-polynomials: recursion vs bar expansion in " + g.datum().name()};
  for (const auto& y : g.ball(max_length, g.identity())) {
    const HeckeElement b = HeckeElement::T_inverse(g.inv(y));
    for (const auto& x : g.lower_interval(y)) {
      ++r.cases;
      const LaurentPoly expected = b.coeff(x) * signed_q_power(x.length() + y.length(), y.length());
      if (engine.R(x, y) != expected) fail(r, "R_{" + g.encode(x) + "," + g.encode(y) + "}");
    }
  }
  return r;
}

CheckResult check_pq_identity(const KLTable& table) {
  const BruhatPoset& poset = table.poset();
  CheckResult r{"P*Q = identity on a set of " + std::to_string(poset.size()) + " elements"};
  for (int w = 0; w < poset.size(); ++w) {
    for (int x : table.below(w)) {
      ++r.cases;
      LaurentPoly sum;
      for (int z : table.below(w)) {
        if (!poset.leq(x, z)) continue;
        LaurentPoly term = table.P(x, z) * table.Q(z, w);
        if ((poset[z].length() - poset[x].length()) % 2) term = -term;
        sum += term;
      }
      if (sum != LaurentPoly(x == w ? 1 : 0)) fail(r, "pair (" + std::to_string(x) + "," + std::to_string(w) + ")");
    }
  }
  return r;
}

CheckResult check_q_recursion(const KLTable& table, KLEngine& engine) {
  const BruhatPoset& poset = table.poset();
  CheckResult r{"Q recursion through R on a set of " + std::to_string(poset.size()) + " elements"};
  for (int y = 0; y < poset.size(); ++y) {
    for (int v : table.below(y)) {
      ++r.cases;
      LaurentPoly sum;
      for (int z : table.below(y))
        if (poset.leq(v, z)) sum += engine.R(poset[z], poset[y]) * table.Q(v, z);
      const int d = poset[y].length() - poset[v].length();
      if (sum != table.Q(v, y).bar().shifted(2 * d)) {
        fail(r, "pair " + engine.group().encode(poset[v]) + " <= " + engine.group().encode(poset[y]));
      }
    }
  }
  return r;
}

CheckResult check_qr_identity(KLEngine& engine, const AffineWeylElement& top, int jobs) {
  const AffineWeylGroup& g = engine.group();
  auto table = engine.table(g.lower_interval(top), jobs);
  table->compute_Q(jobs);
  const BruhatPoset& poset = table->poset();
  CheckResult r{"sum Q R = q_y q_w^-1 Q(q^-1) below " + g.encode(top)};
  for (int y = 0; y < poset.size(); ++y) {
    for (int w : table->below(y)) {
      LaurentPoly sum;
      for (int x : table->below(y)) {
        if (!poset.leq(w, x)) continue;
        ++r.cases;
        sum += table->Q(w, x) * engine.R(poset[x], poset[y]);
      }
      const int d = poset[y].length() - poset[w].length();
      if (sum != table->Q(w, y).bar().shifted(2 * d)) fail(r, "pair " + g.encode(poset[w]) + " <= " + g.encode(poset[y]));
    }
  }
  return r;
}

CheckResult check_wakimoto_closed_form(const AffineWeylGroup& group, std::uint64_t seed, int pairs, int max_total) {
  CheckResult r{"Wakimoto closed form vs Hecke product in " + group.datum().name()};
  std::mt19937_64 rng(seed);
  const auto elems = group.ball(max_total, group.identity());
  for (int k = 0; k < pairs; ++k) {
    const auto [v, w] = random_pair(elems, rng, max_total);
    const HeckeElement h = wakimoto_function(v, w).tilde_product;
    for (const auto& [x, c] : h.terms()) {
      ++r.cases;
      const QPolynomial rv = wakimoto_r_poly(v, w, x);
      if (rv.to_laurent() != c.shifted(x.length()) || !rv.has_nonnegative_coeffs()) {
        fail(r, "v=" + group.encode(v) + " w=" + group.encode(w) + " x=" + group.encode(x));
      }
    }
    // The top term always occurs.
    const AffineWeylElement vw = group.mul(v, w);
    if (vw.length() == v.length() + w.length() && wakimoto_r_poly(v, w, vw) != QPolynomial{{1}}) {
      fail(r, "top term for v=" + group.encode(v) + " w=" + group.encode(w));
    }
  }
  return r;
}

CheckResult check_wakimoto_property_P(const AffineWeylGroup& group, std::uint64_t seed, int pairs, int max_length) {
  CheckResult r{"Wakimoto functions satisfy (P) in " + group.datum().name()};
  std::mt19937_64 rng(seed);
  const auto elems = group.ball(max_length, group.identity());
  const auto tau = group.omega_part(group.translation(group.datum().fundamental_coweights().front()));
  for (int k = 0; k < pairs; ++k) {
    auto [v, w] = random_pair(elems, rng, 2 * max_length);
    if (k % 3 == 1) v = group.mul(tau, v);
    if (k % 3 == 2) w = group.mul(w, tau);
    ++r.cases;
    if (!satisfies_property_P(wakimoto_function(v, w).normalized, v.length() + w.length())) {
      fail(r, "v=" + group.encode(v) + " w=" + group.encode(w));
    }
  }
  return r;
}

CheckResult check_theta_independence(const AffineWeylGroup& group, std::uint64_t seed, int samples) {
  const RootDatum& rd = group.datum();
  CheckResult r{"Theta independent of the decomposition in " + rd.name()};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coeff(0, 2);
  for (int k = 0; k < samples; ++k) {
    const Coweight lam = random_coweight(rd, rng, 2);
    const auto [a, b] = theta_decomposition(rd, lam);
    Coweight shift = rd.zero();
    for (const auto& f : rd.fundamental_coweights()) shift += coeff(rng) * f;
    if (shift.is_zero()) shift = rd.fundamental_coweights().front();
    ++r.cases;
    const HeckeElement t = theta(group, lam);
    if (t != theta(group, a + shift, b + shift) || t != expand_factors(group, theta_alcove_walk(group, lam))) {
      fail(r, "lambda=" + rd.format_coweight(lam));
    }
  }
  return r;
}

CheckResult check_centrality(const AffineWeylGroup& group, const Coweight& lam, int jobs) {
  const RootDatum& rd = group.datum();
  CheckResult r{"z central for " + rd.name() + " lambda=" + rd.format_coweight(lam)};
  const HeckeElement z = central_z(group, lam, jobs);
  std::vector<AffineWeylElement> gens;
  for (int s = 0; s < group.num_simple(); ++s) gens.push_back(group.simple(s));
  for (const auto& f : rd.fundamental_coweights()) gens.push_back(group.omega_part(group.translation(f)));
  for (const auto& x : gens) {
    ++r.cases;
    const HeckeElement t = HeckeElement::T(x);
    if (z * t != t * z) fail(r, "generator " + group.encode(x));
  }
  return r;
}

CheckResult check_kottwitz_property_P(const AffineWeylGroup& group, const Coweight& mu, int jobs) {
  const RootDatum& rd = group.datum();
  CheckResult r{"Kottwitz function satisfies (P) for " + rd.name() + " mu=" + rd.format_coweight(mu)};
  const HeckeElement f = kottwitz_function(group, mu, jobs);
  const int d = group.translation(mu).length();
  r.cases = static_cast<long long>(f.size());
  if (!satisfies_property_P(f, d)) fail(r, "property (P) with d=" + std::to_string(d));
  if (!satisfies_self_dual_P(f, d)) fail(r, "self-dual form with d=" + std::to_string(d));
  if (!kottwitz_coefficients_positive(f, mu)) fail(r, "coefficients not of the form q^a R(Q), R in N[Q]");
  return r;
}

CheckResult check_q_equals_one(KLEngine& engine, const Coweight& mu, int jobs) {
  const AffineWeylGroup& g = engine.group();
  const RootDatum& rd = g.datum();
  CheckResult r{"q=1 specialization for " + rd.name() + " orbit of " + rd.format_coweight(mu)};
  for (const Coweight& lam : rd.weyl_orbit(mu)) {
    const AffineWeylElement t = g.translation(lam);
    HeckeElement h = theta(g, lam);
    h *= LaurentPoly::monomial(t.sign(), t.length());
    const auto coeffs = to_c_basis(h, engine, jobs);
    const auto interval = g.lower_interval(t);
    if (coeffs.size() != interval.size()) fail(r, "support size for lambda=" + rd.format_coweight(lam));
    for (const auto& w : interval) {
      ++r.cases;
      const auto it = coeffs.find(w);
      if (it == coeffs.end() || it->second.eval_at_one() != engine.Q(w, t, jobs).eval_at_one()) {
        fail(r, "lambda=" + rd.format_coweight(lam) + " w=" + g.encode(w));
      }
    }
  }
  return r;
}

std::vector<CheckResult> oracle_suite(std::uint64_t seed, int jobs) {
  std::vector<CheckResult> out;
  auto gl2 = AffineWeylGroup::from_name("GL2");
  auto gl3 = AffineWeylGroup::from_name("GL3");
  auto gl4 = AffineWeylGroup::from_name("GL4");
  auto gsp4 = AffineWeylGroup::from_name("GSp4");
  auto g2 = AffineWeylGroup::from_name("G2");
  KLEngine e_gl2(gl2), e_gl3(gl3), e_gl4(gl4), e_gsp4(gsp4), e_g2(g2);

  out.push_back(check_r_polynomials(e_gl3, 6));
  out.push_back(check_r_polynomials(e_gsp4, 6));
  struct AdmCase {
    KLEngine* engine;
    Coweight mu;
  };
  for (const AdmCase& c : {AdmCase{&e_gl4, {1, 1, 0, 0}}, AdmCase{&e_gsp4, {1, 1, 1}}, AdmCase{&e_g2, {0, 1}}}) {
    auto table = c.engine->table(c.engine->group().adm(c.mu), jobs);
    table->compute_Q(jobs);
    out.push_back(check_pq_identity(*table));
    out.push_back(check_q_recursion(*table, *c.engine));
  }
  const auto ball = gl3->ball(6, gl3->identity());
  out.push_back(check_qr_identity(e_gl3, ball.back(), jobs));
  out.push_back(check_wakimoto_closed_form(*gl3, seed, 120, 8));
  out.push_back(check_wakimoto_closed_form(*gsp4, seed + 1, 120, 8));
  out.push_back(check_wakimoto_property_P(*gl3, seed + 2, 30, 4));
  out.push_back(check_wakimoto_property_P(*g2, seed + 3, 30, 4));
  for (const auto& g : {gl3, gsp4, g2}) out.push_back(check_theta_independence(*g, seed + 4, 20));
  out.push_back(check_centrality(*gl3, Coweight{1, 0, 0}, jobs));
  out.push_back(check_centrality(*gsp4, Coweight{1, 1, 1}, jobs));
  out.push_back(check_centrality(*g2, Coweight{0, 1}, jobs));
  out.push_back(check_kottwitz_property_P(*gl3, Coweight{2, 1, 0}, jobs));
  out.push_back(check_kottwitz_property_P(*gsp4, Coweight{1, 1, 1}, jobs));
  out.push_back(check_q_equals_one(e_gl2, Coweight{1, 0}, jobs));
  out.push_back(check_q_equals_one(e_gl2, Coweight{2, 0}, jobs));
  out.push_back(check_q_equals_one(e_gl3, Coweight{1, 1, 0}, jobs));
  return out;
}

}  // namespace affhecke
