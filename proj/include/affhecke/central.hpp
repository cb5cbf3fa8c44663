#pragma once

#include <utility>

#include "affhecke/hecke.hpp"

namespace affhecke {

/// Splits lam = lam1 - lam2 with both parts dominant. lam2 is the smallest
/// nonnegative combination of fundamental coweights that makes lam + lam2
/// dominant.
std::pair<Coweight, Coweight> theta_decomposition(const RootDatum& datum, const Coweight& lam);

/// Bernstein function Theta_lam = T~_{t_lam1} T~_{t_lam2}^{-1}.
HeckeElement theta(const AffineWeylGroup& group, const Coweight& lam);
/// Same element from an explicit decomposition lam = lam1 - lam2.
/// Throws NotDominant if either part is not dominant.
HeckeElement theta(const AffineWeylGroup& group, const Coweight& lam1, const Coweight& lam2);

/// z_lam = sum of Theta_nu over the Weyl orbit of the dominant coweight lam.
HeckeElement central_z(const AffineWeylGroup& group, const Coweight& lam, int jobs = 1);

/// eps_mu q_mu^{1/2} sum_{lam <= mu} m_mu(lam) z_lam, the semisimple trace of
/// Frobenius on nearby cycles of the local model for mu.
HeckeElement kottwitz_function(const AffineWeylGroup& group, const Coweight& mu, int jobs = 1);

/// Property (P) for degree d: the KL-involution image g of f satisfies
/// bar(g_x) = eps_d eps_x q^d q_x g_x for every x.
bool satisfies_property_P(const HeckeElement& f, int d);

/// Self-dual form: bar(f_x) = eps_x eps_d q_x q^{-d} f_x for every x.
bool satisfies_self_dual_P(const HeckeElement& f, int d);

/// Every coefficient of the Kottwitz function for mu has the form
/// eps_mu q_mu^{1/2} q_x^{-1/2} R(Q) with R in N[Q], and the support lies in
/// Adm(mu).
bool kottwitz_coefficients_positive(const HeckeElement& f, const Coweight& mu);

}  // namespace affhecke
