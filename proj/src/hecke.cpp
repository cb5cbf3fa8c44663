#include "affhecke/hecke.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "affhecke/error.hpp"
#include "affhecke/parallel.hpp"

namespace affhecke {

namespace {

const LaurentPoly& zero_poly() {
  static const LaurentPoly z;
  return z;
}

}  // namespace

// ---------------------------------------------------------------------------
// HeckeElement

HeckeElement HeckeElement::T(const AffineWeylElement& x, const LaurentPoly& c) {
  HeckeElement h(x.group());
  h.add_term(x, c);
  return h;
}

HeckeElement HeckeElement::T_tilde(const AffineWeylElement& x) { return T(x, LaurentPoly::v_power(-x.length())); }

HeckeElement HeckeElement::T_inverse(const AffineWeylElement& x) {
  return T(x.group().identity()).mul_T_inverse(x);
}

LaurentPoly HeckeElement::coeff(const AffineWeylElement& x) const {
  auto it = terms_.find(x);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void HeckeElement::add_term(const AffineWeylElement& x, const LaurentPoly& c) {
  group_->check_same(x);
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(x, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (o.group_ != group_) throw DatumMismatch("Hecke elements of different groups");
  for (const auto& [x, c] : o.terms_) add_term(x, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  if (o.group_ != group_) throw DatumMismatch("Hecke elements of different groups");
  for (const auto& [x, c] : o.terms_) add_term(x, -c);
  return *this;
}

HeckeElement& HeckeElement::operator*=(const LaurentPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [x, coeff] : terms_) coeff *= c;
  return *this;
}

HeckeElement HeckeElement::mul_T_simple(int s) const {
  const LaurentPoly q = LaurentPoly::q_power(1);
  const LaurentPoly q_minus_one = LaurentPoly::q_minus_one();
  HeckeElement out(*group_);
  for (const auto& [x, c] : terms_) {
    const AffineWeylElement xs = group_->right_mul_simple(x, s);
    if (xs.length() > x.length()) {
      out.add_term(xs, c);
    } else {
      out.add_term(xs, q * c);
      out.add_term(x, q_minus_one * c);
    }
  }
  return out;
}

HeckeElement HeckeElement::mul_T_simple_inverse(int s) const {
  const LaurentPoly q_inv = LaurentPoly::q_power(-1);
  const LaurentPoly q_inv_minus_one = q_inv - LaurentPoly(1);
  HeckeElement out(*group_);
  for (const auto& [x, c] : terms_) {
    const AffineWeylElement xs = group_->right_mul_simple(x, s);
    if (xs.length() > x.length()) {
      out.add_term(xs, q_inv * c);
      out.add_term(x, q_inv_minus_one * c);
    } else {
      out.add_term(xs, c);
    }
  }
  return out;
}

HeckeElement HeckeElement::mul_T(const AffineWeylElement& x) const {
  const ReducedWord rw = group_->reduced_word(x);
  HeckeElement out(*group_);
  for (const auto& [y, c] : terms_) out.add_term(group_->mul(y, rw.omega), c);
  for (int s : rw.letters) out = out.mul_T_simple(s);
  return out;
}

HeckeElement HeckeElement::mul_T_inverse(const AffineWeylElement& x) const {
  // T_x = T_omega T_{s_1} ... T_{s_k}, so T_x^{-1} = T_{s_k}^{-1} ... T_{s_1}^{-1} T_{omega^{-1}}.
  const ReducedWord rw = group_->reduced_word(x);
  HeckeElement out = *this;
  for (auto it = rw.letters.rbegin(); it != rw.letters.rend(); ++it) out = out.mul_T_simple_inverse(*it);
  const AffineWeylElement omega_inv = group_->inv(rw.omega);
  HeckeElement shifted(*group_);
  for (const auto& [y, c] : out.terms_) shifted.add_term(group_->mul(y, omega_inv), c);
  return shifted;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
  if (a.group_ != b.group_) throw DatumMismatch("Hecke elements of different groups");
  HeckeElement out(*a.group_);
  for (const auto& [y, c] : b.terms_) {
    HeckeElement term = a.mul_T(y);
    term *= c;
    out += term;
  }
  return out;
}

HeckeElement HeckeElement::bar() const {
  HeckeElement out(*group_);
  for (const auto& [y, c] : terms_) {
    HeckeElement term = T_inverse(group_->inv(y));
    term *= c.bar();
    out += term;
  }
  return out;
}

std::string HeckeElement::pretty() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [x, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.pretty() + ") T" + group_->encode(x);
  }
  return out;
}

// ---------------------------------------------------------------------------
// KLTable

KLTable::KLTable(BruhatPoset poset) : poset_(std::move(poset)) {
  const int n = poset_.size();
  below_.resize(n);
  for (int w = 0; w < n; ++w) below_[w] = poset_.below(w);
  p_.resize(n);
  mu_.resize(n);
}

int KLTable::slot(int x, int w) const {
  const auto& b = below_[w];
  auto it = std::lower_bound(b.begin(), b.end(), x);
  if (it == b.end() || *it != x) return -1;
  return static_cast<int>(it - b.begin());
}

const LaurentPoly& KLTable::P(int x, int w) const {
  const int k = slot(x, w);
  return k < 0 ? zero_poly() : p_[w][k];
}

LaurentPoly KLTable::P(const AffineWeylElement& x, const AffineWeylElement& w) const {
  const int i = poset_.index_of(x), j = poset_.index_of(w);
  if (j < 0) throw NotInAdm("element is outside the table");
  if (i < 0) return {};
  return P(i, j);
}

mpz_class KLTable::mu(int x, int w) const {
  const int d = poset_[w].length() - poset_[x].length();
  if (d <= 0 || d % 2 == 0) return 0;
  return P(x, w).coeff(d - 1);
}

void KLTable::compute_Q(int jobs) {
  if (have_q_) return;
  const int n = size();
  q_.assign(n, {});
  parallel_for(static_cast<std::size_t>(n), jobs, [&](std::size_t wi) {
    const int w = static_cast<int>(wi);
    const auto& b = below_[w];
    std::vector<LaurentPoly> col(b.size());
    for (int k = static_cast<int>(b.size()) - 1; k >= 0; --k) {
      const int y = b[k];
      if (y == w) {
        col[k] = LaurentPoly(1);
        continue;
      }
      LaurentPoly sum;
      for (std::size_t m = k + 1; m < b.size(); ++m) {
        const int x = b[m];
        if (!poset_.leq(y, x)) continue;
        LaurentPoly term = P(y, x) * col[m];
        if ((poset_[x].length() - poset_[y].length()) % 2 != 0) term = -term;
        sum += term;
      }
      col[k] = -sum;
    }
    q_[w] = std::move(col);
  });
  have_q_ = true;
}

const LaurentPoly& KLTable::Q(int x, int w) const {
  if (!have_q_) throw InvariantViolation("compute_Q was not called");
  const int k = slot(x, w);
  return k < 0 ? zero_poly() : q_[w][k];
}

LaurentPoly KLTable::Q(const AffineWeylElement& x, const AffineWeylElement& w) const {
  const int i = poset_.index_of(x), j = poset_.index_of(w);
  if (j < 0) throw NotInAdm("element is outside the table");
  if (i < 0) return {};
  return Q(i, j);
}

// ---------------------------------------------------------------------------
// KLEngine

KLEngine::KLEngine(std::shared_ptr<const AffineWeylGroup> group) : group_(std::move(group)) {}

LaurentPoly KLEngine::R(const AffineWeylElement& x, const AffineWeylElement& y) {
  group_->check_same(x);
  group_->check_same(y);
  if (x.length() > y.length() || !group_->same_component(x, y)) return {};
  if (x == y) return LaurentPoly(1);
  if (x.length() == y.length()) return {};
  const auto key = std::make_pair(x, y);
  {
    std::shared_lock lock(mu_);
    auto it = r_memo_.find(key);
    if (it != r_memo_.end()) return it->second;
  }
  int s = -1;
  for (int i = 0; i < group_->num_simple(); ++i) {
    if (group_->is_right_descent(y, i)) {
      s = i;
      break;
    }
  }
  const AffineWeylElement ys = group_->right_mul_simple(y, s);
  const AffineWeylElement xs = group_->right_mul_simple(x, s);
  LaurentPoly r;
  if (xs.length() < x.length()) {
    r = R(xs, ys);
  } else {
    r = LaurentPoly::q_minus_one() * R(x, ys) + LaurentPoly::q_power(1) * R(xs, ys);
  }
  std::unique_lock lock(mu_);
  r_memo_[key] = r;
  return r;
}

std::shared_ptr<KLTable> KLEngine::table(std::vector<AffineWeylElement> down_closed, int jobs) {
  std::shared_ptr<KLTable> t(new KLTable(BruhatPoset(*group_, std::move(down_closed))));
  const BruhatPoset& poset = t->poset_;
  const int n = poset.size();
  const int S = group_->num_simple();

  // desc[i]: left descent bitmask; left[i*S+s]: index of s*x_i in the set, or -1.
  std::vector<std::uint32_t> desc(n, 0);
  std::vector<int> left(static_cast<std::size_t>(n) * S, -1);
  for (int i = 0; i < n; ++i)
    for (int s = 0; s < S; ++s) {
      const AffineWeylElement sx = group_->left_mul_simple(s, poset[i]);
      if (sx.length() < poset[i].length()) desc[i] |= 1u << s;
      left[i * S + s] = poset.index_of(sx);
    }

  const LaurentPoly q = LaurentPoly::q_power(1);
  auto compute_column = [&](int w) {
    const auto& b = t->below_[w];
    const AffineWeylElement& we = poset[w];
    std::vector<LaurentPoly> col(b.size());
    std::vector<char> done(b.size(), 0);
    {
      std::shared_lock lock(mu_);
      for (std::size_t k = 0; k < b.size(); ++k) {
        auto it = p_memo_.find(std::make_pair(poset[b[k]], we));
        if (it != p_memo_.end()) {
          col[k] = it->second;
          done[k] = 1;
        }
      }
    }
    int s = -1;
    for (int i = 0; i < S; ++i)
      if (desc[w] & (1u << i)) {
        s = i;
        break;
      }
    const int v = s >= 0 ? left[w * S + s] : -1;
    std::vector<std::size_t> deferred;
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (done[k]) continue;
      const int x = b[k];
      const int d = we.length() - poset[x].length();
      if (d <= 2) {
        col[k] = LaurentPoly(1);
        continue;
      }
      if (!(desc[x] & (1u << s))) {
        deferred.push_back(k);
        continue;
      }
      // Here s x < x and s w < w.
      const int sx = left[x * S + s];
      LaurentPoly val = t->P(sx, v) + q * t->P(x, v);
      for (const auto& [z, m] : t->mu_[v]) {
        if (!(desc[z] & (1u << s)) || !poset.leq(x, z)) continue;
        const int e = we.length() - poset[z].length();  // even
        LaurentPoly term = t->P(x, z).shifted(e);
        term *= m;
        val -= term;
      }
      col[k] = std::move(val);
    }
    for (std::size_t k : deferred) {
      // P_{x,w} = P_{sx,w} when s w < w; here s x > x and s x <= w.
      const int sx = left[b[k] * S + s];
      auto it = std::lower_bound(b.begin(), b.end(), sx);
      if (sx < 0 || it == b.end() || *it != sx) throw InvariantViolation("lifting property violated");
      col[k] = col[it - b.begin()];
    }
    std::vector<std::pair<int, mpz_class>> mus;
    for (std::size_t k = 0; k < b.size(); ++k) {
      const int d = we.length() - poset[b[k]].length();
      if (d % 2 == 1) {
        mpz_class m = col[k].coeff(d - 1);
        if (m != 0) mus.emplace_back(b[k], m);
      }
    }
    t->p_[w] = std::move(col);
    t->mu_[w] = std::move(mus);
  };

  // Columns of equal length are independent.
  int start = 0;
  while (start < n) {
    int end = start;
    while (end < n && poset[end].length() == poset[start].length()) ++end;
    parallel_for(static_cast<std::size_t>(end - start), jobs,
                 [&](std::size_t i) { compute_column(start + static_cast<int>(i)); });
    start = end;
  }

  std::unique_lock lock(mu_);
  for (int w = 0; w < n; ++w) {
    const auto& b = t->below_[w];
    for (std::size_t k = 0; k < b.size(); ++k) p_memo_[std::make_pair(poset[b[k]], poset[w])] = t->p_[w][k];
  }
  return t;
}

LaurentPoly KLEngine::P(const AffineWeylElement& x, const AffineWeylElement& w, int jobs) {
  group_->check_same(x);
  group_->check_same(w);
  {
    std::shared_lock lock(mu_);
    auto it = p_memo_.find(std::make_pair(x, w));
    if (it != p_memo_.end()) return it->second;
  }
  if (!group_->bruhat_leq(x, w)) return {};
  return table(group_->lower_interval(w), jobs)->P(x, w);
}

LaurentPoly KLEngine::Q(const AffineWeylElement& x, const AffineWeylElement& w, int jobs) {
  group_->check_same(x);
  group_->check_same(w);
  if (!group_->bruhat_leq(x, w)) return {};
  auto t = table(group_->lower_interval(w), jobs);
  t->compute_Q(jobs);
  return t->Q(x, w);
}

std::size_t KLEngine::memo_size() const {
  std::shared_lock lock(mu_);
  return p_memo_.size();
}

bool KLEngine::load_cache(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) return false;
  std::string line;
  const std::string header =
      std::string("klcache v1 ") + group_->datum().name() + " " + kConventionTag;
  if (!std::getline(in, line) || line != header) return false;
  std::vector<std::pair<std::pair<AffineWeylElement, AffineWeylElement>, LaurentPoly>> records;
  bool saw_end = false;
  try {
    while (std::getline(in, line)) {
      if (line.starts_with("end ")) {
        if (std::stoul(line.substr(4)) != records.size()) return false;
        saw_end = true;
        break;
      }
      std::istringstream fields(line);
      std::string xs, ws, ps, extra;
      if (!(fields >> xs >> ws >> ps) || (fields >> extra)) return false;
      records.push_back({{group_->decode(xs), group_->decode(ws)}, LaurentPoly::decode(ps)});
    }
  } catch (const std::exception&) {
    return false;
  }
  if (!saw_end || std::getline(in, line)) return false;
  std::unique_lock lock(mu_);
  for (auto& [key, value] : records) p_memo_[key] = std::move(value);
  return true;
}

void KLEngine::save_cache(const std::filesystem::path& file) const {
  std::vector<std::pair<std::pair<AffineWeylElement, AffineWeylElement>, LaurentPoly>> records;
  {
    std::shared_lock lock(mu_);
    records.assign(p_memo_.begin(), p_memo_.end());
  }
  std::sort(records.begin(), records.end(), [](const auto& a, const auto& b) {
    if (!(a.first.second == b.first.second)) return a.first.second < b.first.second;
    return a.first.first < b.first.first;
  });
  std::filesystem::create_directories(file.parent_path().empty() ? "." : file.parent_path());
  std::filesystem::path tmp = file;
  tmp += ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write KL cache " + tmp.string());
    out << "klcache v1 " << group_->datum().name() << ' ' << kConventionTag << '\n';
    for (const auto& [key, value] : records) {
      out << group_->encode(key.first) << ' ' << group_->encode(key.second) << ' ' << value.encode() << '\n';
    }
    out << "end " << records.size() << '\n';
    if (!out) throw Error("cannot write KL cache " + tmp.string());
  }
  std::filesystem::rename(tmp, file);
}

// ---------------------------------------------------------------------------
// Base change

std::map<AffineWeylElement, LaurentPoly> to_c_basis(const HeckeElement& a, KLEngine& engine, int jobs) {
  std::map<AffineWeylElement, LaurentPoly> out;
  if (a.is_zero()) return out;
  std::vector<AffineWeylElement> support;
  for (const auto& [w, c] : a.terms()) support.push_back(w);
  auto table = engine.table(a.group().lower_closure(support), jobs);
  table->compute_Q(jobs);
  const BruhatPoset& poset = table->poset();
  for (const auto& [w, c] : a.terms()) {
    const int wi = poset.index_of(w);
    for (int x : table->below(wi)) {
      LaurentPoly term = c * table->Q(x, wi);
      if (w.sign() < 0) term = -term;
      if (term.is_zero()) continue;
      auto [it, inserted] = out.try_emplace(poset[x], term);
      if (!inserted) {
        it->second += term;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

HeckeElement from_c_basis(const AffineWeylGroup& group, const std::map<AffineWeylElement, LaurentPoly>& coeffs,
                          KLEngine& engine, int jobs) {
  HeckeElement out(group);
  if (coeffs.empty()) return out;
  std::vector<AffineWeylElement> support;
  for (const auto& [w, c] : coeffs) support.push_back(w);
  auto table = engine.table(group.lower_closure(support), jobs);
  const BruhatPoset& poset = table->poset();
  for (const auto& [w, c] : coeffs) {
    const int wi = poset.index_of(w);
    for (int x : table->below(wi)) {
      LaurentPoly term = c * table->P(x, wi);
      if (w.sign() < 0) term = -term;
      out.add_term(poset[x], term);
    }
  }
  return out;
}

}  // namespace affhecke
