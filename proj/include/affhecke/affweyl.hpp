#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "affhecke/rootdata.hpp"

namespace affhecke {

class AffineWeylGroup;

/// Element t_lam * w of the extended affine Weyl group X_*(T) x| W, in
/// canonical (translation, finite part) form. The length is computed on
/// construction and cached.
class AffineWeylElement {
 public:
  AffineWeylElement() = default;

  const AffineWeylGroup& group() const { return *group_; }
  const Coweight& translation() const { return lam_; }
  int finite_part() const { return w_; }
  int length() const { return len_; }
  /// (-1)^length
  int sign() const { return (len_ & 1) ? -1 : 1; }

  /// Canonical order: length, then translation, then finite part.
  friend bool operator<(const AffineWeylElement& a, const AffineWeylElement& b) {
    if (a.len_ != b.len_) return a.len_ < b.len_;
    if (a.lam_ != b.lam_) return a.lam_ < b.lam_;
    return a.w_ < b.w_;
  }
  friend bool operator==(const AffineWeylElement& a, const AffineWeylElement& b) {
    return a.w_ == b.w_ && a.lam_ == b.lam_;
  }
  std::size_t hash() const { return lam_.hash() * 31u + static_cast<std::size_t>(w_); }

 private:
  friend class AffineWeylGroup;
  AffineWeylElement(const AffineWeylGroup* g, const Coweight& lam, int w, int len)
      : group_(g), lam_(lam), w_(w), len_(len) {}

  const AffineWeylGroup* group_ = nullptr;
  Coweight lam_;
  int w_ = 0;
  int len_ = 0;
};

struct ElementHash {
  std::size_t operator()(const AffineWeylElement& x) const { return x.hash(); }
};

/// Reduced expression x = omega * s_{i_1} ... s_{i_k}, letters 0..r with 0
/// the affine simple reflection.
struct ReducedWord {
  AffineWeylElement omega;
  std::vector<int> letters;
};

/// The extended affine Weyl group of a root datum. Simple affine reflections
/// are s_i = s_{alpha_i} for i >= 1 and s_0 = t_{theta^vee} s_theta, so the
/// base alcove is the one in the dominant chamber.
class AffineWeylGroup {
 public:
  static std::shared_ptr<const AffineWeylGroup> create(std::shared_ptr<const RootDatum> datum);
  static std::shared_ptr<const AffineWeylGroup> from_name(std::string_view name);

  const RootDatum& datum() const { return *datum_; }
  std::shared_ptr<const RootDatum> datum_ptr() const { return datum_; }
  /// Number of simple affine reflections (semisimple rank + 1, or 0 for GL1).
  int num_simple() const { return num_simple_; }

  AffineWeylElement identity() const;
  AffineWeylElement make(const Coweight& lam, int finite) const;
  AffineWeylElement translation(const Coweight& lam) const;
  AffineWeylElement finite(int w) const;
  AffineWeylElement simple(int i) const;
  /// omega * s_{i_1} ... s_{i_k}; no reducedness requirement.
  AffineWeylElement from_word(const AffineWeylElement& omega, const std::vector<int>& letters) const;

  AffineWeylElement mul(const AffineWeylElement& a, const AffineWeylElement& b) const;
  AffineWeylElement inv(const AffineWeylElement& a) const;
  AffineWeylElement right_mul_simple(const AffineWeylElement& x, int i) const;
  AffineWeylElement left_mul_simple(int i, const AffineWeylElement& x) const;
  bool is_right_descent(const AffineWeylElement& x, int i) const;
  bool is_left_descent(const AffineWeylElement& x, int i) const;
  int length(const Coweight& lam, int finite) const;

  /// Strips the smallest-index right descent repeatedly.
  ReducedWord reduced_word(const AffineWeylElement& x) const;
  /// The length-zero component: x lies in omega * W_aff.
  AffineWeylElement omega_part(const AffineWeylElement& x) const;
  /// Image of x in X_*(T)/Q^vee, which indexes the W_aff-cosets.
  std::vector<int> component(const AffineWeylElement& x) const;
  bool same_component(const AffineWeylElement& x, const AffineWeylElement& y) const;

  bool bruhat_leq(const AffineWeylElement& x, const AffineWeylElement& y) const;
  /// Elements y' < y with l(y') = l(y) - 1.
  std::vector<AffineWeylElement> coatoms(const AffineWeylElement& y) const;
  /// Downward Bruhat closure of a set, sorted canonically.
  std::vector<AffineWeylElement> lower_closure(const std::vector<AffineWeylElement>& tops) const;
  std::vector<AffineWeylElement> lower_interval(const AffineWeylElement& y) const { return lower_closure({y}); }
  /// Adm(mu) = { x : x <= t_lam for some lam in W mu }.
  std::vector<AffineWeylElement> adm(const Coweight& mu) const;
  /// Elements of omega * W_aff of length <= max_length, sorted canonically.
  std::vector<AffineWeylElement> ball(int max_length, const AffineWeylElement& omega) const;

  /// x has no right descent among the finite simple reflections.
  bool is_minimal_coset(const AffineWeylElement& x) const;

  /// "t[1,0,0,0]*w[s1.s2]" with internal translation coordinates and the
  /// lexicographically smallest reduced word of the finite part.
  std::string encode(const AffineWeylElement& x) const;
  AffineWeylElement decode(std::string_view text) const;
  /// Parses "s0.s1.s2" (or "" / "e") into letters.
  std::vector<int> parse_affine_word(std::string_view text) const;

  void check_same(const AffineWeylElement& x) const;

 private:
  explicit AffineWeylGroup(std::shared_ptr<const RootDatum> datum);

  std::shared_ptr<const RootDatum> datum_;
  int num_simple_ = 0;
  Coweight theta_check_;
};

/// Bruhat order restricted to a down-closed finite set, precomputed as
/// bitsets. Elements are indexed in canonical order.
class BruhatPoset {
 public:
  BruhatPoset(const AffineWeylGroup& group, std::vector<AffineWeylElement> elements);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<AffineWeylElement>& elements() const { return elements_; }
  const AffineWeylElement& operator[](int i) const { return elements_[i]; }
  /// Index of x, or -1.
  int index_of(const AffineWeylElement& x) const;
  bool leq(int i, int j) const { return (below_[j][i >> 6] >> (i & 63)) & 1u; }
  /// Indices k with i <= k (including i), ascending.
  std::vector<int> above(int i) const;
  /// Indices k with k <= j (including j), ascending.
  std::vector<int> below(int j) const;
  /// Coatoms of element j inside the set.
  const std::vector<int>& coatoms(int j) const { return coatoms_[j]; }

 private:
  std::vector<AffineWeylElement> elements_;
  std::unordered_map<AffineWeylElement, int, ElementHash> index_;
  std::vector<std::vector<std::uint64_t>> below_;
  std::vector<std::vector<int>> coatoms_;
};

}  // namespace affhecke
