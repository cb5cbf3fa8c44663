#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "affhecke/affweyl.hpp"
#include "affhecke/laurent.hpp"

namespace affhecke {

/// Element of the Iwahori-Hecke algebra in the T basis, with quadratic
/// relation (T_s - q)(T_s + 1) = 0. Terms are kept in canonical element
/// order and zero coefficients are dropped.
class HeckeElement {
 public:
  using Terms = std::map<AffineWeylElement, LaurentPoly>;

  explicit HeckeElement(const AffineWeylGroup& group) : group_(&group) {}
  /// c * T_x
  static HeckeElement T(const AffineWeylElement& x, const LaurentPoly& c = LaurentPoly(1));
  /// T~_x = v^{-l(x)} T_x
  static HeckeElement T_tilde(const AffineWeylElement& x);
  /// T_x^{-1}
  static HeckeElement T_inverse(const AffineWeylElement& x);

  const AffineWeylGroup& group() const { return *group_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  LaurentPoly coeff(const AffineWeylElement& x) const;

  void add_term(const AffineWeylElement& x, const LaurentPoly& c);
  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement& operator*=(const LaurentPoly& c);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.group_ == b.group_ && a.terms_ == b.terms_;
  }

  /// this * T_s
  HeckeElement mul_T_simple(int s) const;
  /// this * T_s^{-1}
  HeckeElement mul_T_simple_inverse(int s) const;
  /// this * T_x
  HeckeElement mul_T(const AffineWeylElement& x) const;
  /// this * T_x^{-1}
  HeckeElement mul_T_inverse(const AffineWeylElement& x) const;

  /// Kazhdan-Lusztig involution: v -> v^{-1} on coefficients and
  /// T_y -> T_{y^{-1}}^{-1}.
  HeckeElement bar() const;

  std::string pretty() const;

 private:
  const AffineWeylGroup* group_;
  Terms terms_;
};

class KLEngine;

/// P, mu and (on demand) inverse KL polynomials Q on a down-closed finite
/// subset of the extended affine Weyl group.
class KLTable {
 public:
  const BruhatPoset& poset() const { return poset_; }
  int size() const { return poset_.size(); }

  /// P_{x,w}; zero unless x <= w.
  const LaurentPoly& P(int x, int w) const;
  LaurentPoly P(const AffineWeylElement& x, const AffineWeylElement& w) const;
  /// Coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w} (zero for even differences).
  mpz_class mu(int x, int w) const;
  /// Pairs (z, mu(z, w)) with mu nonzero.
  const std::vector<std::pair<int, mpz_class>>& mu_list(int w) const { return mu_[w]; }

  /// Solves sum_{x <= z <= w} (-1)^{l(z)-l(x)} P_{x,z} Q_{z,w} = delta_{x,w}.
  void compute_Q(int jobs = 1);
  const LaurentPoly& Q(int x, int w) const;
  LaurentPoly Q(const AffineWeylElement& x, const AffineWeylElement& w) const;

  /// Ascending indices x with x <= w.
  const std::vector<int>& below(int w) const { return below_[w]; }

 private:
  friend class KLEngine;
  explicit KLTable(BruhatPoset poset);
  int slot(int x, int w) const;

  BruhatPoset poset_;
  std::vector<std::vector<int>> below_;
  std::vector<std::vector<LaurentPoly>> p_;
  std::vector<std::vector<LaurentPoly>> q_;
  std::vector<std::vector<std::pair<int, mpz_class>>> mu_;
  bool have_q_ = false;
};

/// Kazhdan-Lusztig data for one extended affine Weyl group, memoized across
/// calls and optionally persisted to disk. Thread-safe.
class KLEngine {
 public:
  explicit KLEngine(std::shared_ptr<const AffineWeylGroup> group);

  const AffineWeylGroup& group() const { return *group_; }
  std::shared_ptr<const AffineWeylGroup> group_ptr() const { return group_; }

  /// R-polynomial R_{x,y}, with bar(T_y) = eps_y q_y^{-1} sum_x eps_x R_{x,y} T_x.
  LaurentPoly R(const AffineWeylElement& x, const AffineWeylElement& y);
  LaurentPoly P(const AffineWeylElement& x, const AffineWeylElement& w, int jobs = 1);
  LaurentPoly Q(const AffineWeylElement& x, const AffineWeylElement& w, int jobs = 1);

  /// Computes P (and mu) for every pair of a down-closed set.
  std::shared_ptr<KLTable> table(std::vector<AffineWeylElement> down_closed, int jobs = 1);

  /// Loads a cache file; returns false (and loads nothing) if it is missing,
  /// corrupt, or written for another group or convention.
  bool load_cache(const std::filesystem::path& file);
  /// Writes all memoized P values atomically (temp file + rename).
  void save_cache(const std::filesystem::path& file) const;
  std::size_t memo_size() const;
  /// Identifies the simple-reflection convention in cache headers.
  static constexpr const char* kConventionTag = "alcove-dominant";
  static std::string cache_file_name(const AffineWeylGroup& g) { return g.datum().name() + ".klcache"; }

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<AffineWeylElement, AffineWeylElement>& p) const {
      return p.first.hash() * 1000003u ^ p.second.hash();
    }
  };
  using PairMap = std::unordered_map<std::pair<AffineWeylElement, AffineWeylElement>, LaurentPoly, PairHash>;

  std::shared_ptr<const AffineWeylGroup> group_;
  mutable std::shared_mutex mu_;
  PairMap p_memo_;
  PairMap r_memo_;
};

/// Coefficients of a in the C'' basis: T_w = sum_x eps_w Q_{x,w} C''_x.
std::map<AffineWeylElement, LaurentPoly> to_c_basis(const HeckeElement& a, KLEngine& engine, int jobs = 1);
/// Element with the given C'' coefficients: C''_w = eps_w sum_x P_{x,w} T_x.
HeckeElement from_c_basis(const AffineWeylGroup& group, const std::map<AffineWeylElement, LaurentPoly>& coeffs,
                          KLEngine& engine, int jobs = 1);

}  // namespace affhecke
