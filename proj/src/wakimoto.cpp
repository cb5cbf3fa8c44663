#include "affhecke/wakimoto.hpp"

#include <cstdlib>

#include "affhecke/error.hpp"

namespace affhecke {

namespace {

void require_affine(const AffineWeylGroup& g, const AffineWeylElement& x) {
  g.check_same(x);
  if (!(g.omega_part(x) == g.identity())) throw NotInAffineWeylGroup(g.encode(x));
}

LaurentPoly sign_poly(int parity) { return LaurentPoly(parity % 2 ? -1 : 1); }

void enumerate(const AffineWeylGroup& g, const std::vector<int>& word, std::size_t j, const AffineWeylElement& target,
               Subexpression& cur, std::vector<Subexpression>& out) {
  const AffineWeylElement prev = cur.sigma.back();
  if (j == word.size()) {
    if (prev == target) out.push_back(cur);
    return;
  }
  // Remaining letters change the length by at most their number.
  const int remaining = static_cast<int>(word.size() - j);
  if (std::abs(prev.length() - target.length()) > remaining) return;
  const AffineWeylElement next = g.right_mul_simple(prev, word[j]);
  if (next.length() > prev.length()) {
    cur.sigma.push_back(prev);
    ++cur.n_stat;
    enumerate(g, word, j + 1, target, cur, out);
    --cur.n_stat;
    cur.sigma.back() = next;
    enumerate(g, word, j + 1, target, cur, out);
    cur.sigma.pop_back();
  } else {
    cur.sigma.push_back(next);
    ++cur.m_stat;
    enumerate(g, word, j + 1, target, cur, out);
    --cur.m_stat;
    cur.sigma.pop_back();
  }
}

}  // namespace

std::vector<Subexpression> distinguished_subexpressions(const AffineWeylElement& v, const AffineWeylElement& w,
                                                         const AffineWeylElement& x) {
  const AffineWeylGroup& g = v.group();
  require_affine(g, w);
  return distinguished_subexpressions(v, g.reduced_word(w).letters, x);
}

std::vector<Subexpression> distinguished_subexpressions(const AffineWeylElement& v, const std::vector<int>& word,
                                                         const AffineWeylElement& x) {
  const AffineWeylGroup& g = v.group();
  require_affine(g, v);
  g.check_same(x);
  if (g.from_word(g.identity(), word).length() != static_cast<int>(word.size())) {
    throw InvalidInput("word is not reduced");
  }
  Subexpression cur;
  cur.base_word = word;
  cur.sigma.push_back(v);
  std::vector<Subexpression> out;
  enumerate(g, cur.base_word, 0, x, cur, out);
  return out;
}

QPolynomial wakimoto_r_poly(const AffineWeylElement& v, const AffineWeylElement& w, const AffineWeylElement& x) {
  QPolynomial r;
  for (const Subexpression& s : distinguished_subexpressions(v, w, x)) {
    if (static_cast<int>(r.coeffs.size()) <= s.n_stat) r.coeffs.resize(s.n_stat + 1);
    r.coeffs[s.n_stat] += 1;
  }
  return r;
}

WakimotoFunction wakimoto_function(const AffineWeylElement& v, const AffineWeylElement& w) {
  const AffineWeylGroup& g = v.group();
  g.check_same(w);
  HeckeElement tilde =
      HeckeElement::T(v, LaurentPoly::v_power(w.length() - v.length())).mul_T_inverse(g.inv(w));
  HeckeElement normalized = tilde;
  normalized *= sign_poly(v.length() + w.length()) * LaurentPoly::v_power(v.length() + w.length());
  return {std::move(tilde), std::move(normalized)};
}

HeckeElement expand_factors(const AffineWeylGroup& group, const std::vector<TildeFactor>& factors) {
  HeckeElement r = HeckeElement::T(group.identity());
  for (const TildeFactor& f : factors) {
    group.check_same(f.element);
    if (f.exponent == 1) {
      r = r.mul_T(f.element);
      r *= LaurentPoly::v_power(-f.element.length());
    } else if (f.exponent == -1) {
      r = r.mul_T_inverse(f.element);
      r *= LaurentPoly::v_power(f.element.length());
    } else {
      throw InvalidInput("factor exponent must be 1 or -1, got " + std::to_string(f.exponent));
    }
  }
  return r;
}

bool minimal_expression_degree_check(const AffineWeylGroup& group, const std::vector<TildeFactor>& factors) {
  AffineWeylElement product = group.identity();
  int k = 0;
  for (const TildeFactor& f : factors) {
    group.check_same(f.element);
    product = group.mul(product, f.element);
    k += f.element.length();
  }
  if (product.length() != k) {
    throw NotMinimal("factor lengths sum to " + std::to_string(k) + " but the product has length " +
                     std::to_string(product.length()));
  }
  const HeckeElement expanded = expand_factors(group, factors);
  for (const auto& [x, c] : expanded.terms()) {
    QPolynomial r;
    if (!try_expand_in_q(c.shifted(x.length()), r)) return false;
    if (r.degree() > k - x.length()) return false;
  }
  return true;
}

std::vector<TildeFactor> theta_alcove_walk(const AffineWeylGroup& group, const Coweight& lam) {
  const RootDatum& rd = group.datum();
  const ReducedWord rw = group.reduced_word(group.translation(lam));
  std::vector<TildeFactor> out;
  out.push_back({rw.omega, 1});
  AffineWeylElement y = rw.omega;
  for (int i : rw.letters) {
    // Gradient of the affine root y(a_i) bounding the alcove being left.
    const int r = i == 0 ? rd.negate_root(rd.highest_root_index()) : rd.simple_root_indices()[i - 1];
    const int gradient = rd.weyl().act_on_root(y.finite_part(), r);
    out.push_back({group.simple(i), rd.is_positive_root(gradient) ? -1 : 1});
    y = group.right_mul_simple(y, i);
  }
  return out;
}

}  // namespace affhecke
