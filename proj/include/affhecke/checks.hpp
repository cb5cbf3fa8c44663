#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "affhecke/hecke.hpp"

namespace affhecke {

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool passed = true;
  /// Number of individual comparisons made.
  long long cases = 0;
  /// First failure, if any.
  std::string detail;
};

/// R_{x,y} from the recursion against the coefficients of T_{y^{-1}}^{-1},
/// for all x <= y with y in the ball of the given radius.
CheckResult check_r_polynomials(KLEngine& engine, int max_length);

/// sum_z (-1)^{l(z)-l(x)} P_{x,z} Q_{z,w} = delta_{x,w} on a table with Q.
CheckResult check_pq_identity(const KLTable& table);

/// q^{l(y)-l(v)} Q_{v,y}(q^{-1}) = sum_{v<=z<=y} R_{z,y} Q_{v,z} on a table
/// with Q.
CheckResult check_q_recursion(const KLTable& table, KLEngine& engine);

/// sum_{w<=x<=y} Q_{w,x} R_{x,y} = q_y q_w^{-1} Q_{w,y}(q^{-1}) for all
/// w <= y' <= y in the lower interval of y.
CheckResult check_qr_identity(KLEngine& engine, const AffineWeylElement& top, int jobs = 1);

/// Closed form for R^v_{x,w} against the expanded product, for random pairs
/// in the affine Weyl group with l(v) + l(w) <= max_total.
CheckResult check_wakimoto_closed_form(const AffineWeylGroup& group, std::uint64_t seed, int pairs, int max_total);

/// Wakimoto functions satisfy (P) with d = l(v) + l(w).
CheckResult check_wakimoto_property_P(const AffineWeylGroup& group, std::uint64_t seed, int pairs, int max_length);

/// Theta_lam from two different dominant decompositions, random lam.
CheckResult check_theta_independence(const AffineWeylGroup& group, std::uint64_t seed, int samples);

/// z_lam commutes with every T_s and with T_omega for the length-zero
/// elements coming from fundamental coweights.
CheckResult check_centrality(const AffineWeylGroup& group, const Coweight& lam, int jobs = 1);

/// The Kottwitz function satisfies (P) with d = l(t_mu), and its coefficients
/// are eps_mu q_mu^{1/2} q_x^{-1/2} R(Q) with R in N[Q].
CheckResult check_kottwitz_property_P(const AffineWeylGroup& group, const Coweight& mu, int jobs = 1);

/// For every lam in the orbit of mu, the C'' coefficients a_w of
/// eps_lam q_lam^{1/2} Theta_lam satisfy a_w(1) = Q_{w,t_lam}(1) and are
/// nonzero exactly for w <= t_lam.
CheckResult check_q_equals_one(KLEngine& engine, const Coweight& mu, int jobs = 1);

/// A fixed set of the checks above on small groups.
std::vector<CheckResult> oracle_suite(std::uint64_t seed, int jobs = 1);

}  // namespace affhecke
