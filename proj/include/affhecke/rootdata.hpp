#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace affhecke {

inline constexpr int kMaxLatticeRank = 8;

/// Small fixed-capacity integer vector. The tag keeps coweights (elements of
/// X_*(T)) and weights (elements of X^*(T), e.g. roots) from being mixed up.
template <class Tag>
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(int dim) : dim_(static_cast<std::uint8_t>(dim)) {}
  LatticeVector(std::initializer_list<int> xs) : dim_(static_cast<std::uint8_t>(xs.size())) {
    int i = 0;
    for (int x : xs) c_[i++] = x;
  }
  explicit LatticeVector(std::span<const int> xs) : dim_(static_cast<std::uint8_t>(xs.size())) {
    for (std::size_t i = 0; i < xs.size(); ++i) c_[i] = xs[i];
  }

  int size() const { return dim_; }
  int operator[](int i) const { return c_[i]; }
  int& operator[](int i) { return c_[i]; }
  std::span<const int> coords() const { return {c_.data(), dim_}; }

  LatticeVector& operator+=(const LatticeVector& o) {
    for (int i = 0; i < dim_; ++i) c_[i] += o.c_[i];
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) {
    for (int i = 0; i < dim_; ++i) c_[i] -= o.c_[i];
    return *this;
  }
  LatticeVector operator-() const {
    LatticeVector r(dim_);
    for (int i = 0; i < dim_; ++i) r.c_[i] = -c_[i];
    return r;
  }
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(int k, LatticeVector a) {
    for (int i = 0; i < a.dim_; ++i) a.c_[i] *= k;
    return a;
  }
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

  bool is_zero() const {
    for (int i = 0; i < dim_; ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  std::size_t hash() const {
    std::size_t h = dim_;
    for (int i = 0; i < dim_; ++i) h = h * 1000003u ^ static_cast<std::size_t>(c_[i] + 0x9e37);
    return h;
  }
  /// "1,1,0,0"
  std::string str() const {
    std::string s;
    for (int i = 0; i < dim_; ++i) {
      if (i) s += ',';
      s += std::to_string(c_[i]);
    }
    return s;
  }

 private:
  // Unused trailing entries stay zero so defaulted comparisons are exact.
  std::array<int, kMaxLatticeRank> c_{};
  std::uint8_t dim_ = 0;
};

struct CoweightTag {};
struct WeightTag {};
using Coweight = LatticeVector<CoweightTag>;
using Weight = LatticeVector<WeightTag>;

inline int pair(const Weight& a, const Coweight& x) {
  int s = 0;
  for (int i = 0; i < a.size(); ++i) s += a[i] * x[i];
  return s;
}

struct CoweightHash {
  std::size_t operator()(const Coweight& c) const { return c.hash(); }
};

enum class Family { GL, GSp, G2 };

class RootDatum;

/// The finite Weyl group W, enumerated once. Elements are dense indices; the
/// identity is index 0. Acts on coweights by integer matrices.
class FiniteWeylGroup {
 public:
  explicit FiniteWeylGroup(const RootDatum& datum);

  int size() const { return static_cast<int>(length_.size()); }
  int length(int w) const { return length_[w]; }
  int inverse(int w) const { return inverse_[w]; }
  int simple(int i) const { return simple_[i]; }  // i = 0..rank-1
  int num_simple() const { return static_cast<int>(simple_.size()); }
  /// Index of the reflection in the highest root.
  int theta_reflection() const { return theta_refl_; }
  int mul(int a, int b) const;
  int right_mul_simple(int w, int i) const { return right_simple_[w * simple_.size() + i]; }
  int left_mul_simple(int i, int w) const { return left_simple_[w * simple_.size() + i]; }
  int right_mul_theta(int w) const { return right_theta_[w]; }
  int left_mul_theta(int w) const { return left_theta_[w]; }
  Coweight act(int w, const Coweight& x) const;
  /// Index (into RootDatum::roots()) of w applied to root r.
  int act_on_root(int w, int r) const { return root_perm_[w * num_roots_ + r]; }
  /// Bit k set iff w^{-1}(alpha_k) > 0 for the k-th positive root.
  std::uint64_t inverse_positive_mask(int w) const { return inv_pos_mask_[w]; }
  /// Lexicographically smallest reduced word, simple indices 1-based.
  const std::vector<int>& reduced_word(int w) const { return words_[w]; }
  /// Product s_{i1} ... s_{ik} for 1-based indices; throws ParseError on bad ones.
  int from_word(std::span<const int> word) const;
  bool is_reflection(int w) const;

 private:
  int key_of(const std::vector<int>& mat) const;

  int dim_;
  int num_roots_;
  std::vector<std::vector<int>> mats_;
  std::vector<int> length_, inverse_, simple_;
  std::vector<int> right_simple_, left_simple_, right_theta_, left_theta_;
  std::vector<int> root_perm_;
  std::vector<std::uint64_t> inv_pos_mask_;
  std::vector<std::vector<int>> words_;
  std::vector<bool> reflection_;
  int theta_refl_ = 0;
  // Elements are identified by the image of a regular dominant coweight.
  Coweight regular_;
  std::unordered_map<Coweight, int, CoweightHash> index_;
};

/// Based root datum of type GL_n, GSp_2n or G2 in a fixed coordinate lattice.
///
/// Coordinates of X_*(T):
///  - GL_n:   Z^n.
///  - GSp_2n: (a_1, ..., a_n; c) with c the similitude, corresponding to
///            the cocharacter diag(x^a_1, ..., x^a_n, x^(c-a_n), ..., x^(c-a_1)).
///  - G2:     coefficients with respect to the fundamental coweights
///            (simple root 1 short, simple root 2 long).
class RootDatum {
 public:
  static std::shared_ptr<const RootDatum> create(Family family, int rank);
  /// "GL4", "GSp6", "G2".
  static std::shared_ptr<const RootDatum> from_name(std::string_view name);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  int dim() const { return dim_; }
  int semisimple_rank() const { return static_cast<int>(simple_roots_.size()); }
  const std::string& name() const { return name_; }

  /// All roots; the first num_positive() are the positive ones.
  const std::vector<Weight>& roots() const { return roots_; }
  const std::vector<Coweight>& coroots() const { return coroots_; }
  int num_positive() const { return num_positive_; }
  int root_index(const Weight& a) const;
  bool is_positive_root(int r) const { return r < num_positive_; }
  int negate_root(int r) const { return negation_[r]; }
  const std::vector<int>& simple_root_indices() const { return simple_idx_; }
  const Weight& simple_root(int i) const { return roots_[simple_idx_[i]]; }
  const Coweight& simple_coroot(int i) const { return coroots_[simple_idx_[i]]; }
  int highest_root_index() const { return theta_; }
  /// Fundamental coweights: <alpha_j, g_i> = delta_ij; each is dominant.
  const std::vector<Coweight>& fundamental_coweights() const { return fund_coweights_; }
  /// 2 rho^vee: sum of positive coroots.
  const Coweight& two_rho_check() const { return two_rho_check_; }
  const FiniteWeylGroup& weyl() const { return *weyl_; }

  Coweight zero() const { return Coweight(dim_); }
  Coweight reflect(int root, const Coweight& x) const;
  bool is_dominant(const Coweight& x) const;
  Coweight dominant_conjugate(const Coweight& x) const;
  /// Class of x in X_*(T)/Q^vee (coordinates of the central quotient).
  std::vector<int> central_class(const Coweight& x) const;
  /// True iff mu - lam is a nonnegative integral combination of positive coroots.
  bool dominance_leq(const Coweight& lam, const Coweight& mu) const;
  /// Coefficients of mu - lam in the simple coroots (valid when the central
  /// classes agree).
  std::vector<int> simple_coroot_coefficients(const Coweight& diff) const;
  std::vector<Coweight> weyl_orbit(const Coweight& x) const;
  /// Dominant lam <= mu, sorted descending by height then coordinates; mu first.
  std::vector<Coweight> dominant_below(const Coweight& mu) const;
  /// Multiplicity of lam in the irreducible representation of the dual group
  /// with highest weight mu (Freudenthal recursion).
  mpz_class weight_multiplicity(const Coweight& mu, const Coweight& lam) const;
  /// Weyl dimension formula for the dual-group representation V_mu.
  mpz_class weyl_dimension(const Coweight& mu) const;
  /// Minuscule: <alpha, mu> in {-1, 0, 1} for every root alpha.
  bool is_minuscule(const Coweight& mu) const;

  /// Parses the external coordinate notation. GL_n: n integers. GSp_2n: 2n
  /// integers (a_1..a_n, c-a_n..c-a_1) or the n+1 internal ones. G2: the 2
  /// internal fundamental coefficients or 3 integers (a,b,c) with
  /// a+b+c = 0 mod 3, read modulo (1,1,1).
  Coweight parse_coweight(std::string_view text) const;
  /// External notation (inverse of the above for the canonical representative).
  std::string format_coweight(const Coweight& x) const;

 private:
  RootDatum() = default;
  void finish();

  Family family_ = Family::GL;
  int rank_ = 0;
  int dim_ = 0;
  std::string name_;
  std::vector<Weight> simple_roots_;
  std::vector<Coweight> simple_coroots_;
  std::vector<Weight> fund_weights_;   // <fund_weights_[i], simple coroot j> = delta_ij
  std::vector<Weight> central_covectors_;
  std::vector<Coweight> fund_coweights_;
  std::vector<Weight> roots_;
  std::vector<Coweight> coroots_;
  std::vector<int> negation_;
  std::vector<int> simple_idx_;
  int num_positive_ = 0;
  int theta_ = 0;
  Coweight two_rho_check_;
  std::unique_ptr<FiniteWeylGroup> weyl_;
};

}  // namespace affhecke
