#pragma once

#include <utility>
#include <vector>

#include "affhecke/hecke.hpp"

namespace affhecke {

/// A v-distinguished subexpression [sigma_0, ..., sigma_r] of a reduced word
/// s_1 ... s_r: sigma_0 = v, sigma_j is sigma_{j-1} or sigma_{j-1} s_j, and
/// sigma_j = sigma_{j-1} only when sigma_{j-1} s_j > sigma_{j-1}.
struct Subexpression {
  std::vector<int> base_word;
  std::vector<AffineWeylElement> sigma;
  int n_stat = 0;  // steps with sigma_j = sigma_{j-1}
  int m_stat = 0;  // steps going down
};

/// All v-distinguished subexpressions of the reduced word of w ending at x.
/// v and w must lie in the affine Weyl group (trivial length-zero part).
std::vector<Subexpression> distinguished_subexpressions(const AffineWeylElement& v, const AffineWeylElement& w,
                                                         const AffineWeylElement& x);
/// Same, for an explicit reduced word.
std::vector<Subexpression> distinguished_subexpressions(const AffineWeylElement& v, const std::vector<int>& word,
                                                         const AffineWeylElement& x);

/// R^v_{x,w}(Q) = sum over distinguished subexpressions ending at x of Q^n.
QPolynomial wakimoto_r_poly(const AffineWeylElement& v, const AffineWeylElement& w, const AffineWeylElement& x);

struct WakimotoFunction {
  /// T~_v T~_{w^{-1}}^{-1} = sum_x R^v_{x,w}(Q) T~_x
  HeckeElement tilde_product;
  /// eps_v eps_w q_w T_v T_{w^{-1}}^{-1}
  HeckeElement normalized;
};

/// Any v, w in the extended group.
WakimotoFunction wakimoto_function(const AffineWeylElement& v, const AffineWeylElement& w);

/// Factor T~_t^{+1} or T~_t^{-1}.
struct TildeFactor {
  AffineWeylElement element;
  int exponent = 1;
};

HeckeElement expand_factors(const AffineWeylGroup& group, const std::vector<TildeFactor>& factors);

/// For a length-additive product t_1 ... t_k of total length k, checks that
/// the coefficient of every T~_x has Q-degree at most k - l(x).
/// Throws NotMinimal if the lengths do not add up.
bool minimal_expression_degree_check(const AffineWeylGroup& group, const std::vector<TildeFactor>& factors);

/// Theta_lam written along a reduced alcove walk from the base alcove to its
/// translate by lam: T_omega T~_{s_1}^{e_1} ... T~_{s_k}^{e_k}, where e_j is -1
/// exactly when the j-th wall is crossed against the dominant direction.
std::vector<TildeFactor> theta_alcove_walk(const AffineWeylGroup& group, const Coweight& lam);

}  // namespace affhecke
