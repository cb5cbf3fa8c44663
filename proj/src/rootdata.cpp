#include "affhecke/rootdata.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <mutex>
#include <set>

#include "affhecke/error.hpp"

namespace affhecke {

namespace {

using Matrix = std::vector<int>;  // row-major dim x dim

Matrix identity(int dim) {
  Matrix m(dim * dim, 0);
  for (int i = 0; i < dim; ++i) m[i * dim + i] = 1;
  return m;
}

Matrix matmul(const Matrix& a, const Matrix& b, int dim) {
  Matrix r(dim * dim, 0);
  for (int i = 0; i < dim; ++i)
    for (int k = 0; k < dim; ++k) {
      const int aik = a[i * dim + k];
      if (aik == 0) continue;
      for (int j = 0; j < dim; ++j) r[i * dim + j] += aik * b[k * dim + j];
    }
  return r;
}

Coweight mat_apply(const Matrix& m, const Coweight& x) {
  const int dim = x.size();
  Coweight r(dim);
  for (int i = 0; i < dim; ++i) {
    int s = 0;
    for (int j = 0; j < dim; ++j) s += m[i * dim + j] * x[j];
    r[i] = s;
  }
  return r;
}

// x -> x - <alpha, x> alpha^vee
Matrix reflection_matrix(const Weight& root, const Coweight& coroot) {
  const int dim = root.size();
  Matrix m = identity(dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m[r * dim + c] -= coroot[r] * root[c];
  return m;
}

Weight unit_weight(int dim, int i, int value = 1) {
  Weight w(dim);
  w[i] = value;
  return w;
}

Coweight unit_coweight(int dim, int i, int value = 1) {
  Coweight w(dim);
  w[i] = value;
  return w;
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::string cleaned;
  for (char ch : text) {
    if (ch == '(' || ch == ')' || ch == '[' || ch == ']' || ch == ' ') continue;
    cleaned += ch;
  }
  if (cleaned.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = cleaned.find(',', pos);
    if (end == std::string::npos) end = cleaned.size();
    int value = 0;
    const char* first = cleaned.data() + pos;
    const char* last = cleaned.data() + end;
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last) {
      throw ParseError("bad integer list '" + std::string(text) + "'");
    }
    out.push_back(value);
    if (end == cleaned.size()) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// FiniteWeylGroup

FiniteWeylGroup::FiniteWeylGroup(const RootDatum& datum)
    : dim_(datum.dim()), num_roots_(static_cast<int>(datum.roots().size())) {
  const int r = datum.semisimple_rank();
  regular_ = datum.zero();
  for (const auto& g : datum.fundamental_coweights()) regular_ += g;

  std::vector<Matrix> gens;
  for (int i = 0; i < r; ++i) gens.push_back(reflection_matrix(datum.simple_root(i), datum.simple_coroot(i)));

  // BFS over left multiplication; BFS depth is the length.
  std::vector<std::pair<int, int>> parent{{-1, -1}};  // w = s_i * parent
  mats_.push_back(identity(dim_));
  length_.push_back(0);
  index_.emplace(regular_, 0);
  for (std::size_t head = 0; head < mats_.size(); ++head) {
    for (int i = 0; i < r; ++i) {
      Matrix m = matmul(gens[i], mats_[head], dim_);
      const Coweight key = mat_apply(m, regular_);
      if (index_.count(key)) continue;
      index_.emplace(key, static_cast<int>(mats_.size()));
      length_.push_back(length_[head] + 1);
      parent.emplace_back(i, static_cast<int>(head));
      mats_.push_back(std::move(m));
    }
  }
  const int n = size();

  for (int i = 0; i < r; ++i) simple_.push_back(key_of(gens[i]));
  right_simple_.resize(static_cast<std::size_t>(n) * r);
  left_simple_.resize(static_cast<std::size_t>(n) * r);
  inverse_.resize(n);
  for (int w = 0; w < n; ++w) {
    for (int i = 0; i < r; ++i) {
      right_simple_[w * r + i] = key_of(matmul(mats_[w], gens[i], dim_));
      left_simple_[w * r + i] = key_of(matmul(gens[i], mats_[w], dim_));
    }
  }

  // (s_i p)^{-1} = p^{-1} s_i; parents precede children.
  inverse_[0] = 0;
  for (int w = 1; w < n; ++w) {
    inverse_[w] = right_simple_[inverse_[parent[w].second] * r + parent[w].first];
  }

  // Root permutation via the coroots: w(alpha)^vee = w(alpha^vee).
  std::unordered_map<Coweight, int, CoweightHash> coroot_index;
  for (int k = 0; k < num_roots_; ++k) coroot_index.emplace(datum.coroots()[k], k);
  root_perm_.resize(static_cast<std::size_t>(n) * num_roots_);
  for (int w = 0; w < n; ++w)
    for (int k = 0; k < num_roots_; ++k) {
      auto it = coroot_index.find(mat_apply(mats_[w], datum.coroots()[k]));
      if (it == coroot_index.end()) throw InvariantViolation("Weyl group does not permute coroots");
      root_perm_[w * num_roots_ + k] = it->second;
    }

  const int npos = datum.num_positive();
  if (npos > 64) throw UnsupportedFamilyRank("too many positive roots");
  inv_pos_mask_.resize(n);
  for (int w = 0; w < n; ++w) {
    std::uint64_t mask = 0;
    int inversions = 0;
    for (int k = 0; k < npos; ++k) {
      if (act_on_root(inverse_[w], k) < npos) mask |= std::uint64_t{1} << k;
      if (act_on_root(w, k) >= npos) ++inversions;
    }
    inv_pos_mask_[w] = mask;
    if (inversions != length_[w]) throw InvariantViolation("Weyl group length mismatch");
  }

  words_.resize(n);
  for (int w = 0; w < n; ++w) {
    int cur = w;
    while (length_[cur] > 0) {
      // Smallest left descent: s_i with w^{-1}(alpha_i) < 0.
      int chosen = -1;
      for (int i = 0; i < r; ++i) {
        if (act_on_root(inverse_[cur], datum.simple_root_indices()[i]) >= npos) {
          chosen = i;
          break;
        }
      }
      words_[w].push_back(chosen + 1);
      cur = left_simple_[cur * r + chosen];
    }
  }

  reflection_.assign(n, false);
  for (int k = 0; k < npos; ++k) {
    reflection_[key_of(reflection_matrix(datum.roots()[k], datum.coroots()[k]))] = true;
  }
  right_theta_.resize(n);
  left_theta_.resize(n);
  if (datum.highest_root_index() >= 0) {
    const int t = datum.highest_root_index();
    const Matrix st = reflection_matrix(datum.roots()[t], datum.coroots()[t]);
    theta_refl_ = key_of(st);
    for (int w = 0; w < n; ++w) {
      right_theta_[w] = key_of(matmul(mats_[w], st, dim_));
      left_theta_[w] = key_of(matmul(st, mats_[w], dim_));
    }
  }
}

int FiniteWeylGroup::key_of(const Matrix& mat) const {
  auto it = index_.find(mat_apply(mat, regular_));
  if (it == index_.end()) throw InvariantViolation("matrix is not in the Weyl group");
  return it->second;
}

int FiniteWeylGroup::mul(int a, int b) const {
  int cur = a;
  for (int i : words_[b]) cur = right_mul_simple(cur, i - 1);
  return cur;
}

Coweight FiniteWeylGroup::act(int w, const Coweight& x) const { return mat_apply(mats_[w], x); }

int FiniteWeylGroup::from_word(std::span<const int> word) const {
  int cur = 0;
  for (int i : word) {
    if (i < 1 || i > num_simple()) {
      throw ParseError("simple reflection index " + std::to_string(i) + " out of range");
    }
    cur = right_mul_simple(cur, i - 1);
  }
  return cur;
}

bool FiniteWeylGroup::is_reflection(int w) const { return reflection_[w]; }

// ---------------------------------------------------------------------------
// RootDatum

std::shared_ptr<const RootDatum> RootDatum::create(Family family, int rank) {
  std::shared_ptr<RootDatum> d(new RootDatum());
  d->family_ = family;
  d->rank_ = rank;
  switch (family) {
    case Family::GL: {
      if (rank < 1 || rank > kMaxLatticeRank) {
        throw UnsupportedFamilyRank("GL_n needs 1 <= n <= " + std::to_string(kMaxLatticeRank));
      }
      const int n = rank;
      d->dim_ = n;
      d->name_ = "GL" + std::to_string(n);
      for (int i = 0; i + 1 < n; ++i) {
        Weight a(n);
        a[i] = 1;
        a[i + 1] = -1;
        Coweight c(n);
        c[i] = 1;
        c[i + 1] = -1;
        d->simple_roots_.push_back(a);
        d->simple_coroots_.push_back(c);
      }
      for (int i = 1; i < n; ++i) {
        Coweight g(n);
        Weight w(n);
        for (int j = 0; j < i; ++j) g[j] = w[j] = 1;
        d->fund_coweights_.push_back(g);
        d->fund_weights_.push_back(w);
      }
      Weight det(n);
      for (int i = 0; i < n; ++i) det[i] = 1;
      d->central_covectors_.push_back(det);
      break;
    }
    case Family::GSp: {
      if (rank < 2 || rank > 6) throw UnsupportedFamilyRank("GSp_2n needs 2 <= n <= 6");
      const int n = rank;
      const int dim = n + 1;  // a_1..a_n, c
      d->dim_ = dim;
      d->name_ = "GSp" + std::to_string(2 * n);
      for (int i = 0; i + 1 < n; ++i) {
        Weight a(dim);
        a[i] = 1;
        a[i + 1] = -1;
        Coweight c(dim);
        c[i] = 1;
        c[i + 1] = -1;
        d->simple_roots_.push_back(a);
        d->simple_coroots_.push_back(c);
      }
      Weight last(dim);
      last[n - 1] = 2;
      last[n] = -1;
      d->simple_roots_.push_back(last);
      d->simple_coroots_.push_back(unit_coweight(dim, n - 1));
      for (int i = 1; i <= n; ++i) {
        Coweight g(dim);
        Weight w(dim);
        for (int j = 0; j < i; ++j) g[j] = w[j] = 1;
        if (i == n) g[n] = 1;
        d->fund_coweights_.push_back(g);
        d->fund_weights_.push_back(w);
      }
      d->central_covectors_.push_back(unit_weight(dim, n));
      break;
    }
    case Family::G2: {
      if (rank != 2) throw UnsupportedFamilyRank("G2 has rank 2");
      d->dim_ = 2;
      d->name_ = "G2";
      d->simple_roots_ = {Weight{1, 0}, Weight{0, 1}};
      d->simple_coroots_ = {Coweight{2, -3}, Coweight{-1, 2}};
      d->fund_coweights_ = {Coweight{1, 0}, Coweight{0, 1}};
      d->fund_weights_ = {Weight{2, 1}, Weight{3, 2}};
      break;
    }
  }
  d->finish();
  return d;
}

void RootDatum::finish() {
  const int r = semisimple_rank();
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (pair(simple_roots_[j], fund_coweights_[i]) != (i == j ? 1 : 0) ||
          pair(fund_weights_[i], simple_coroots_[j]) != (i == j ? 1 : 0)) {
        throw InvariantViolation("fundamental (co)weights are not dual to the simple (co)roots");
      }
    }
  for (const auto& z : central_covectors_)
    for (const auto& c : simple_coroots_)
      if (pair(z, c) != 0) throw InvariantViolation("central covector does not kill a coroot");

  // Close {(alpha_i, alpha_i^vee)} under the simple reflections.
  std::map<Weight, Coweight> found;
  std::deque<std::pair<Weight, Coweight>> queue;
  for (int i = 0; i < r; ++i) {
    found.emplace(simple_roots_[i], simple_coroots_[i]);
    queue.emplace_back(simple_roots_[i], simple_coroots_[i]);
  }
  while (!queue.empty()) {
    auto [a, c] = queue.front();
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      // s_i(a) = a - <a, alpha_i^vee> alpha_i ; s_i(c) = c - <alpha_i, c> alpha_i^vee
      Weight a2 = a - pair(a, simple_coroots_[i]) * simple_roots_[i];
      Coweight c2 = c - pair(simple_roots_[i], c) * simple_coroots_[i];
      if (found.emplace(a2, c2).second) queue.emplace_back(a2, c2);
    }
  }
  Coweight height_vec = zero();
  for (const auto& g : fund_coweights_) height_vec += g;
  std::vector<std::pair<Weight, Coweight>> positive;
  for (const auto& [a, c] : found) {
    if (pair(a, c) != 2) throw InvariantViolation("root and coroot do not pair to 2");
    if (pair(a, height_vec) > 0) positive.emplace_back(a, c);
  }
  std::stable_sort(positive.begin(), positive.end(), [&](const auto& x, const auto& y) {
    return pair(x.first, height_vec) < pair(y.first, height_vec);
  });
  num_positive_ = static_cast<int>(positive.size());
  const int expected = family_ == Family::GL    ? rank_ * (rank_ - 1) / 2
                       : family_ == Family::GSp ? rank_ * rank_
                                                : 6;
  if (num_positive_ != expected || 2 * num_positive_ != static_cast<int>(found.size())) {
    throw InvariantViolation("unexpected number of positive roots for " + name_);
  }
  for (const auto& [a, c] : positive) {
    roots_.push_back(a);
    coroots_.push_back(c);
  }
  for (const auto& [a, c] : positive) {
    roots_.push_back(-a);
    coroots_.push_back(-c);
  }
  negation_.resize(roots_.size());
  for (int k = 0; k < num_positive_; ++k) {
    negation_[k] = k + num_positive_;
    negation_[k + num_positive_] = k;
  }
  for (int i = 0; i < r; ++i) simple_idx_.push_back(root_index(simple_roots_[i]));

  // Cartan matrix a_ij = <alpha_j, alpha_i^vee> against the family.
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      int want = i == j ? 2 : (i == j + 1 || j == i + 1) ? -1 : 0;
      if (family_ == Family::GSp && i == r - 2 && j == r - 1) want = -2;
      if (family_ == Family::G2 && i == 0 && j == 1) want = -3;
      if (pair(simple_roots_[j], simple_coroots_[i]) != want) {
        throw InvariantViolation("Cartan matrix of " + name_ + " does not match its family");
      }
    }

  theta_ = -1;
  if (num_positive_ > 0) theta_ = num_positive_ - 1;
  for (int k = 0; k + 1 < num_positive_; ++k) {
    if (pair(roots_[k], height_vec) == pair(roots_[theta_], height_vec)) {
      throw InvariantViolation("highest root is not unique");
    }
  }
  two_rho_check_ = zero();
  for (int k = 0; k < num_positive_; ++k) two_rho_check_ += coroots_[k];
  weyl_ = std::make_unique<FiniteWeylGroup>(*this);
}

std::shared_ptr<const RootDatum> RootDatum::from_name(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const RootDatum>, std::less<>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
  }
  auto parse_rank = [&](std::string_view digits) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw UnsupportedFamilyRank("unknown group '" + std::string(name) + "'");
    }
    return value;
  };
  std::shared_ptr<const RootDatum> d;
  if (name == "G2") {
    d = create(Family::G2, 2);
  } else if (name.starts_with("GSp")) {
    const int m = parse_rank(name.substr(3));
    if (m % 2 != 0) throw UnsupportedFamilyRank("GSp needs an even index: '" + std::string(name) + "'");
    d = create(Family::GSp, m / 2);
  } else if (name.starts_with("GL")) {
    d = create(Family::GL, parse_rank(name.substr(2)));
  } else {
    throw UnsupportedFamilyRank("unknown group '" + std::string(name) + "'");
  }
  std::lock_guard lock(mu);
  return cache.emplace(std::string(name), d).first->second;
}

int RootDatum::root_index(const Weight& a) const {
  for (std::size_t k = 0; k < roots_.size(); ++k)
    if (roots_[k] == a) return static_cast<int>(k);
  throw InvalidInput("not a root of " + name_ + ": " + a.str());
}

Coweight RootDatum::reflect(int root, const Coweight& x) const {
  return x - pair(roots_[root], x) * coroots_[root];
}

bool RootDatum::is_dominant(const Coweight& x) const {
  for (int i = 0; i < semisimple_rank(); ++i)
    if (pair(simple_roots_[i], x) < 0) return false;
  return true;
}

Coweight RootDatum::dominant_conjugate(const Coweight& x) const {
  Coweight y = x;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < semisimple_rank(); ++i) {
      const int p = pair(simple_roots_[i], y);
      if (p < 0) {
        y -= p * simple_coroots_[i];
        changed = true;
      }
    }
  }
  return y;
}

std::vector<int> RootDatum::central_class(const Coweight& x) const {
  std::vector<int> out;
  for (const auto& z : central_covectors_) out.push_back(pair(z, x));
  return out;
}

std::vector<int> RootDatum::simple_coroot_coefficients(const Coweight& diff) const {
  std::vector<int> out;
  for (const auto& w : fund_weights_) out.push_back(pair(w, diff));
  return out;
}

bool RootDatum::dominance_leq(const Coweight& lam, const Coweight& mu) const {
  if (lam.size() != dim_ || mu.size() != dim_) throw DimensionMismatch("coweight dimension");
  const Coweight diff = mu - lam;
  for (const auto& z : central_covectors_)
    if (pair(z, diff) != 0) return false;
  for (int c : simple_coroot_coefficients(diff))
    if (c < 0) return false;
  return true;
}

std::vector<Coweight> RootDatum::weyl_orbit(const Coweight& x) const {
  std::set<Coweight> seen{x};
  std::deque<Coweight> queue{x};
  while (!queue.empty()) {
    const Coweight y = queue.front();
    queue.pop_front();
    for (int i = 0; i < semisimple_rank(); ++i) {
      Coweight z = y - pair(simple_roots_[i], y) * simple_coroots_[i];
      if (seen.insert(z).second) queue.push_back(z);
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Coweight> RootDatum::dominant_below(const Coweight& mu) const {
  if (mu.size() != dim_) throw DimensionMismatch("coweight dimension");
  if (!is_dominant(mu)) throw NotDominant(mu.str() + " is not dominant in " + name_);
  std::set<Coweight> seen{mu};
  std::deque<Coweight> queue{mu};
  while (!queue.empty()) {
    const Coweight y = queue.front();
    queue.pop_front();
    for (int k = 0; k < num_positive_; ++k) {
      Coweight z = dominant_conjugate(y - coroots_[k]);
      if (dominance_leq(z, mu) && seen.insert(z).second) queue.push_back(z);
    }
  }
  std::vector<Coweight> out(seen.begin(), seen.end());
  auto depth = [&](const Coweight& lam) {
    int s = 0;
    for (int c : simple_coroot_coefficients(mu - lam)) s += c;
    return s;
  };
  std::sort(out.begin(), out.end(), [&](const Coweight& a, const Coweight& b) {
    const int da = depth(a), db = depth(b);
    if (da != db) return da < db;
    return a > b;
  });
  return out;
}

bool RootDatum::is_minuscule(const Coweight& mu) const {
  for (int k = 0; k < num_positive_; ++k) {
    const int p = pair(roots_[k], mu);
    if (p < -1 || p > 1) return false;
  }
  return true;
}

mpz_class RootDatum::weight_multiplicity(const Coweight& mu, const Coweight& lam) const {
  if (mu.size() != dim_ || lam.size() != dim_) throw DimensionMismatch("coweight dimension");
  if (!is_dominant(mu)) throw NotDominant(mu.str() + " is not dominant in " + name_);
  if (!is_dominant(lam)) throw NotDominant(lam.str() + " is not dominant in " + name_);
  if (!dominance_leq(lam, mu)) return 0;

  // W-invariant form on coweights: B(x, y) = sum over all roots <a,x><a,y>.
  auto form = [&](const Coweight& x, const Coweight& y) {
    long s = 0;
    for (const auto& a : roots_) s += static_cast<long>(pair(a, x)) * pair(a, y);
    return s;
  };
  // Dominant weights are processed top-down, so every m(dom(lam + k beta))
  // needed on the right-hand side is already known.
  const std::vector<Coweight> doms = dominant_below(mu);
  std::map<Coweight, mpz_class> mult;
  auto lookup = [&](const Coweight& x) -> mpz_class {
    auto it = mult.find(dominant_conjugate(x));
    return it == mult.end() ? mpz_class(0) : it->second;
  };
  for (const Coweight& nu : doms) {
    if (nu == mu) {
      mult[nu] = 1;
      continue;
    }
    mpz_class rhs = 0;
    for (int k = 0; k < num_positive_; ++k) {
      const Coweight& beta = coroots_[k];
      Coweight cur = nu + beta;
      while (true) {
        const Coweight d = dominant_conjugate(cur);
        if (!dominance_leq(d, mu)) break;
        rhs += lookup(cur) * form(cur, beta);
        cur += beta;
      }
    }
    rhs *= 2;
    const long lhs = form(mu - nu, mu + nu + two_rho_check_);
    if (lhs <= 0) throw InvariantViolation("Freudenthal denominator is not positive");
    mpz_class m = rhs / lhs;
    if (m * lhs != rhs) throw InvariantViolation("Freudenthal recursion is not integral");
    mult[nu] = m;
    if (nu == lam) break;
  }
  return mult[lam];
}

mpz_class RootDatum::weyl_dimension(const Coweight& mu) const {
  mpz_class num = 1, den = 1;
  const Coweight shifted = 2 * mu + two_rho_check_;
  for (int k = 0; k < num_positive_; ++k) {
    num *= pair(roots_[k], shifted);
    den *= pair(roots_[k], two_rho_check_);
  }
  return num / den;
}

Coweight RootDatum::parse_coweight(std::string_view text) const {
  const std::vector<int> xs = parse_int_list(text);
  const auto mismatch = [&]() {
    return DimensionMismatch("'" + std::string(text) + "' has " + std::to_string(xs.size()) +
                             " coordinates, which does not fit " + name_);
  };
  switch (family_) {
    case Family::GL:
      if (static_cast<int>(xs.size()) != dim_) throw mismatch();
      return Coweight(std::span<const int>(xs));
    case Family::GSp: {
      const int n = rank_;
      if (static_cast<int>(xs.size()) == n + 1) return Coweight(std::span<const int>(xs));
      if (static_cast<int>(xs.size()) != 2 * n) throw mismatch();
      Coweight out(dim_);
      const int c = xs[0] + xs[2 * n - 1];
      for (int i = 0; i < n; ++i) {
        if (xs[i] + xs[2 * n - 1 - i] != c) {
          throw ParseError("'" + std::string(text) + "' is not a symplectic similitude cocharacter");
        }
        out[i] = xs[i];
      }
      out[n] = c;
      return out;
    }
    case Family::G2: {
      if (xs.size() == 2) return Coweight{xs[0], xs[1]};
      if (xs.size() != 3) throw mismatch();
      const int a = xs[0], b = xs[1], c = xs[2];
      if (((a + b + c) % 3 + 3) % 3 != 0) {
        throw ParseError("G2 triple '" + std::string(text) + "' needs a+b+c divisible by 3");
      }
      return Coweight{(-a + 2 * b - c) / 3, a - b};
    }
  }
  throw InvariantViolation("unreachable");
}

std::string RootDatum::format_coweight(const Coweight& x) const {
  std::vector<int> xs;
  switch (family_) {
    case Family::GL:
      return x.str();
    case Family::GSp: {
      const int n = rank_;
      for (int i = 0; i < n; ++i) xs.push_back(x[i]);
      for (int i = n - 1; i >= 0; --i) xs.push_back(x[n] - x[i]);
      break;
    }
    case Family::G2:
      xs = {3 * x[0] + 2 * x[1], 3 * x[0] + x[1], 0};
      break;
  }
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

}  // namespace affhecke
