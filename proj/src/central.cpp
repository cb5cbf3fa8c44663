#include "affhecke/central.hpp"

#include <map>
#include <set>

#include "affhecke/error.hpp"
#include "affhecke/parallel.hpp"

namespace affhecke {

std::pair<Coweight, Coweight> theta_decomposition(const RootDatum& datum, const Coweight& lam) {
  if (lam.size() != datum.dim()) throw DimensionMismatch("coweight " + lam.str() + " for " + datum.name());
  Coweight lam2 = datum.zero();
  const auto& fund = datum.fundamental_coweights();
  for (int i = 0; i < datum.semisimple_rank(); ++i) {
    const int a = pair(datum.simple_root(i), lam);
    if (a < 0) lam2 += (-a) * fund[i];
  }
  return {lam + lam2, lam2};
}

HeckeElement theta(const AffineWeylGroup& group, const Coweight& lam1, const Coweight& lam2) {
  const RootDatum& rd = group.datum();
  if (!rd.is_dominant(lam1)) throw NotDominant(rd.format_coweight(lam1));
  if (!rd.is_dominant(lam2)) throw NotDominant(rd.format_coweight(lam2));
  const AffineWeylElement t1 = group.translation(lam1);
  const AffineWeylElement t2 = group.translation(lam2);
  HeckeElement r = HeckeElement::T(t1, LaurentPoly::v_power(t2.length() - t1.length()));
  return r.mul_T_inverse(t2);
}

HeckeElement theta(const AffineWeylGroup& group, const Coweight& lam) {
  const auto [lam1, lam2] = theta_decomposition(group.datum(), lam);
  return theta(group, lam1, lam2);
}

namespace {

HeckeElement sum_thetas(const AffineWeylGroup& group, const std::vector<Coweight>& lams,
                        const std::vector<LaurentPoly>& weights, int jobs) {
  std::vector<HeckeElement> parts(lams.size(), HeckeElement(group));
  parallel_for(lams.size(), jobs, [&](std::size_t i) {
    parts[i] = theta(group, lams[i]);
    parts[i] *= weights[i];
  });
  HeckeElement total(group);
  for (const auto& p : parts) total += p;
  return total;
}

}  // namespace

HeckeElement central_z(const AffineWeylGroup& group, const Coweight& lam, int jobs) {
  const RootDatum& rd = group.datum();
  if (!rd.is_dominant(lam)) throw NotDominant(rd.format_coweight(lam));
  const auto orbit = rd.weyl_orbit(lam);
  return sum_thetas(group, orbit, std::vector<LaurentPoly>(orbit.size(), LaurentPoly(1)), jobs);
}

HeckeElement kottwitz_function(const AffineWeylGroup& group, const Coweight& mu, int jobs) {
  const RootDatum& rd = group.datum();
  if (!rd.is_dominant(mu)) throw NotDominant(rd.format_coweight(mu));
  std::vector<Coweight> lams;
  std::vector<LaurentPoly> weights;
  for (const Coweight& lam : rd.dominant_below(mu)) {
    const mpz_class m = rd.weight_multiplicity(mu, lam);
    if (m == 0) continue;
    for (const Coweight& nu : rd.weyl_orbit(lam)) {
      lams.push_back(nu);
      weights.emplace_back(m);
    }
  }
  HeckeElement f = sum_thetas(group, lams, weights, jobs);
  const int l_mu = group.translation(mu).length();
  LaurentPoly prefactor = LaurentPoly::monomial(l_mu % 2 ? -1 : 1, l_mu);
  f *= prefactor;
  for (const auto& [x, c] : f.terms()) {
    if (!c.is_in_q()) {
      throw InvariantViolation("Kottwitz function for " + rd.format_coweight(mu) + " has odd powers of v at " +
                               group.encode(x));
    }
  }
  return f;
}

bool satisfies_property_P(const HeckeElement& f, int d) {
  const HeckeElement g = f.bar();
  for (const auto& [x, c] : g.terms()) {
    const int sign = ((d + x.length()) % 2) ? -1 : 1;
    if (c.bar() != LaurentPoly::monomial(sign, 2 * (d + x.length())) * c) return false;
  }
  return true;
}

bool satisfies_self_dual_P(const HeckeElement& f, int d) {
  for (const auto& [x, c] : f.terms()) {
    const int sign = ((d + x.length()) % 2) ? -1 : 1;
    if (c.bar() != LaurentPoly::monomial(sign, 2 * (x.length() - d)) * c) return false;
  }
  return true;
}

bool kottwitz_coefficients_positive(const HeckeElement& f, const Coweight& mu) {
  const AffineWeylGroup& group = f.group();
  const AffineWeylElement t_mu = group.translation(mu);
  const auto adm = group.adm(mu);
  const std::set<AffineWeylElement> in_adm(adm.begin(), adm.end());
  for (const auto& [x, c] : f.terms()) {
    if (!in_adm.count(x)) return false;
    LaurentPoly r = c;
    if (t_mu.length() % 2) r *= mpz_class(-1);
    QPolynomial expansion;
    if (!try_expand_in_q(r.shifted(x.length() - t_mu.length()), expansion)) return false;
    if (!expansion.has_nonnegative_coeffs()) return false;
  }
  return true;
}

}  // namespace affhecke
