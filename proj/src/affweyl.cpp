#include "affhecke/affweyl.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <map>
#include <mutex>
#include <unordered_set>

#include "affhecke/error.hpp"

namespace affhecke {

AffineWeylGroup::AffineWeylGroup(std::shared_ptr<const RootDatum> datum) : datum_(std::move(datum)) {
  const int r = datum_->semisimple_rank();
  num_simple_ = r == 0 ? 0 : r + 1;
  theta_check_ = datum_->zero();
  if (r > 0) theta_check_ = datum_->coroots()[datum_->highest_root_index()];
}

std::shared_ptr<const AffineWeylGroup> AffineWeylGroup::create(std::shared_ptr<const RootDatum> datum) {
  return std::shared_ptr<const AffineWeylGroup>(new AffineWeylGroup(std::move(datum)));
}

std::shared_ptr<const AffineWeylGroup> AffineWeylGroup::from_name(std::string_view name) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const AffineWeylGroup>, std::less<>> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  auto g = create(RootDatum::from_name(name));
  return cache.emplace(std::string(name), g).first->second;
}

int AffineWeylGroup::length(const Coweight& lam, int finite) const {
  const RootDatum& d = *datum_;
  const std::uint64_t mask = d.weyl().inverse_positive_mask(finite);
  int len = 0;
  for (int k = 0; k < d.num_positive(); ++k) {
    const int p = pair(d.roots()[k], lam);
    len += ((mask >> k) & 1u) ? std::abs(p) : std::abs(p - 1);
  }
  return len;
}

AffineWeylElement AffineWeylGroup::make(const Coweight& lam, int finite) const {
  if (lam.size() != datum_->dim()) {
    throw DimensionMismatch("translation " + lam.str() + " does not fit " + datum_->name());
  }
  return AffineWeylElement(this, lam, finite, length(lam, finite));
}

AffineWeylElement AffineWeylGroup::identity() const { return AffineWeylElement(this, datum_->zero(), 0, 0); }

AffineWeylElement AffineWeylGroup::translation(const Coweight& lam) const { return make(lam, 0); }

AffineWeylElement AffineWeylGroup::finite(int w) const { return make(datum_->zero(), w); }

AffineWeylElement AffineWeylGroup::simple(int i) const {
  if (i < 0 || i >= num_simple_) throw InvalidInput("no simple affine reflection s" + std::to_string(i));
  if (i == 0) return make(theta_check_, datum_->weyl().theta_reflection());
  return finite(datum_->weyl().simple(i - 1));
}

void AffineWeylGroup::check_same(const AffineWeylElement& x) const {
  if (x.group_ != this) throw DatumMismatch("element belongs to a different group");
}

AffineWeylElement AffineWeylGroup::mul(const AffineWeylElement& a, const AffineWeylElement& b) const {
  check_same(a);
  check_same(b);
  const auto& W = datum_->weyl();
  return make(a.lam_ + W.act(a.w_, b.lam_), W.mul(a.w_, b.w_));
}

AffineWeylElement AffineWeylGroup::inv(const AffineWeylElement& a) const {
  check_same(a);
  const auto& W = datum_->weyl();
  const int wi = W.inverse(a.w_);
  return AffineWeylElement(this, -W.act(wi, a.lam_), wi, a.len_);
}

AffineWeylElement AffineWeylGroup::right_mul_simple(const AffineWeylElement& x, int i) const {
  const auto& W = datum_->weyl();
  if (i == 0) return make(x.lam_ + W.act(x.w_, theta_check_), W.right_mul_theta(x.w_));
  return make(x.lam_, W.right_mul_simple(x.w_, i - 1));
}

AffineWeylElement AffineWeylGroup::left_mul_simple(int i, const AffineWeylElement& x) const {
  const auto& W = datum_->weyl();
  const RootDatum& d = *datum_;
  if (i == 0) {
    const int t = d.highest_root_index();
    return make(theta_check_ + d.reflect(t, x.lam_), W.left_mul_theta(x.w_));
  }
  return make(d.reflect(d.simple_root_indices()[i - 1], x.lam_), W.left_mul_simple(i - 1, x.w_));
}

bool AffineWeylGroup::is_right_descent(const AffineWeylElement& x, int i) const {
  return right_mul_simple(x, i).len_ < x.len_;
}

bool AffineWeylGroup::is_left_descent(const AffineWeylElement& x, int i) const {
  return left_mul_simple(i, x).len_ < x.len_;
}

ReducedWord AffineWeylGroup::reduced_word(const AffineWeylElement& x) const {
  check_same(x);
  ReducedWord out;
  AffineWeylElement cur = x;
  while (cur.len_ > 0) {
    bool found = false;
    for (int i = 0; i < num_simple_; ++i) {
      AffineWeylElement next = right_mul_simple(cur, i);
      if (next.len_ < cur.len_) {
        out.letters.push_back(i);
        cur = next;
        found = true;
        break;
      }
    }
    if (!found) throw InvariantViolation("element of positive length without a right descent");
  }
  std::reverse(out.letters.begin(), out.letters.end());
  out.omega = cur;
  return out;
}

AffineWeylElement AffineWeylGroup::omega_part(const AffineWeylElement& x) const { return reduced_word(x).omega; }

AffineWeylElement AffineWeylGroup::from_word(const AffineWeylElement& omega, const std::vector<int>& letters) const {
  check_same(omega);
  AffineWeylElement cur = omega;
  for (int i : letters) {
    if (i < 0 || i >= num_simple_) throw InvalidInput("no simple affine reflection s" + std::to_string(i));
    cur = right_mul_simple(cur, i);
  }
  return cur;
}

std::vector<int> AffineWeylGroup::component(const AffineWeylElement& x) const {
  return datum_->central_class(x.lam_);
}

bool AffineWeylGroup::same_component(const AffineWeylElement& x, const AffineWeylElement& y) const {
  return component(x) == component(y);
}

bool AffineWeylGroup::bruhat_leq(const AffineWeylElement& x, const AffineWeylElement& y) const {
  check_same(x);
  check_same(y);
  if (!same_component(x, y)) return false;
  AffineWeylElement a = x, b = y;
  // Lifting property: for a left descent s of b, a <= b iff min(a, sa) <= sb.
  while (true) {
    if (a.len_ > b.len_) return false;
    if (a.len_ == b.len_) return a == b;
    if (a.len_ == 0) return true;  // same component, so a = omega <= b
    int s = -1;
    AffineWeylElement sb;
    for (int i = 0; i < num_simple_; ++i) {
      sb = left_mul_simple(i, b);
      if (sb.len_ < b.len_) {
        s = i;
        break;
      }
    }
    AffineWeylElement sa = left_mul_simple(s, a);
    if (sa.len_ < a.len_) a = sa;
    b = sb;
  }
}

std::vector<AffineWeylElement> AffineWeylGroup::coatoms(const AffineWeylElement& y) const {
  const ReducedWord rw = reduced_word(y);
  const int k = static_cast<int>(rw.letters.size());
  std::vector<AffineWeylElement> out;
  // prefix[j] = omega s_1 .. s_j
  std::vector<AffineWeylElement> prefix{rw.omega};
  for (int j = 0; j < k; ++j) prefix.push_back(right_mul_simple(prefix.back(), rw.letters[j]));
  for (int j = 0; j < k; ++j) {
    AffineWeylElement cur = prefix[j];
    for (int m = j + 1; m < k; ++m) cur = right_mul_simple(cur, rw.letters[m]);
    if (cur.len_ == y.len_ - 1 && std::find(out.begin(), out.end(), cur) == out.end()) out.push_back(cur);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AffineWeylElement> AffineWeylGroup::lower_closure(const std::vector<AffineWeylElement>& tops) const {
  std::unordered_set<AffineWeylElement, ElementHash> seen;
  std::deque<AffineWeylElement> queue;
  for (const auto& t : tops) {
    check_same(t);
    if (seen.insert(t).second) queue.push_back(t);
  }
  while (!queue.empty()) {
    const AffineWeylElement y = queue.front();
    queue.pop_front();
    for (const auto& c : coatoms(y))
      if (seen.insert(c).second) queue.push_back(c);
  }
  std::vector<AffineWeylElement> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<AffineWeylElement> AffineWeylGroup::adm(const Coweight& mu) const {
  if (mu.size() != datum_->dim()) throw DimensionMismatch("coweight " + mu.str() + " does not fit " + datum_->name());
  if (!datum_->is_dominant(mu)) throw NotDominant(mu.str() + " is not dominant in " + datum_->name());
  std::vector<AffineWeylElement> tops;
  for (const auto& lam : datum_->weyl_orbit(mu)) tops.push_back(translation(lam));
  return lower_closure(tops);
}

std::vector<AffineWeylElement> AffineWeylGroup::ball(int max_length, const AffineWeylElement& omega) const {
  check_same(omega);
  if (omega.len_ != 0) throw InvalidInput("ball center must have length zero");
  std::unordered_set<AffineWeylElement, ElementHash> seen{omega};
  std::vector<AffineWeylElement> layer{omega};
  for (int len = 0; len < max_length; ++len) {
    std::vector<AffineWeylElement> next;
    for (const auto& x : layer)
      for (int i = 0; i < num_simple_; ++i) {
        AffineWeylElement y = right_mul_simple(x, i);
        if (y.len_ > x.len_ && seen.insert(y).second) next.push_back(y);
      }
    layer = std::move(next);
  }
  std::vector<AffineWeylElement> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

bool AffineWeylGroup::is_minimal_coset(const AffineWeylElement& x) const {
  for (int i = 1; i < num_simple_; ++i)
    if (is_right_descent(x, i)) return false;
  return true;
}

std::string AffineWeylGroup::encode(const AffineWeylElement& x) const {
  std::string out = "t[" + x.lam_.str() + "]*w[";
  const auto& word = datum_->weyl().reduced_word(x.w_);
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += '.';
    out += 's' + std::to_string(word[i]);
  }
  return out + "]";
}

namespace {

int parse_small_int(std::string_view s, std::string_view whole) {
  int value = 0;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc() || ptr != last) {
    throw ParseError("malformed element '" + std::string(whole) + "'");
  }
  return value;
}

std::vector<int> parse_letters(std::string_view body, std::string_view whole) {
  std::vector<int> out;
  if (body.empty() || body == "e") return out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = body.find('.', pos);
    if (end == std::string_view::npos) end = body.size();
    std::string_view tok = body.substr(pos, end - pos);
    if (tok.size() < 2 || tok[0] != 's') throw ParseError("malformed word in '" + std::string(whole) + "'");
    out.push_back(parse_small_int(tok.substr(1), whole));
    if (end == body.size()) break;
    pos = end + 1;
  }
  return out;
}

}  // namespace

std::vector<int> AffineWeylGroup::parse_affine_word(std::string_view text) const {
  std::vector<int> letters = parse_letters(text, text);
  for (int i : letters)
    if (i < 0 || i >= num_simple_) throw ParseError("no simple affine reflection s" + std::to_string(i));
  return letters;
}

AffineWeylElement AffineWeylGroup::decode(std::string_view text) const {
  std::string compact;
  for (char ch : text)
    if (ch != ' ') compact += ch;
  const std::string_view s = compact;
  if (!s.starts_with("t[")) throw ParseError("malformed element '" + std::string(text) + "'");
  const std::size_t close = s.find(']');
  if (close == std::string_view::npos || s.substr(close, 4) != "]*w[" || !s.ends_with("]")) {
    throw ParseError("malformed element '" + std::string(text) + "'");
  }
  const std::string_view coords = s.substr(2, close - 2);
  const std::string_view word = s.substr(close + 4, s.size() - close - 5);
  Coweight lam(datum_->dim());
  int count = 0;
  if (!coords.empty()) {
    std::size_t pos = 0;
    while (true) {
      std::size_t end = coords.find(',', pos);
      if (end == std::string_view::npos) end = coords.size();
      if (count >= datum_->dim()) throw DimensionMismatch("too many coordinates in '" + std::string(text) + "'");
      lam[count++] = parse_small_int(coords.substr(pos, end - pos), text);
      if (end == coords.size()) break;
      pos = end + 1;
    }
  }
  if (count != datum_->dim()) throw DimensionMismatch("wrong number of coordinates in '" + std::string(text) + "'");
  const std::vector<int> letters = parse_letters(word, text);
  return make(lam, datum_->weyl().from_word(letters));
}

// ---------------------------------------------------------------------------
// BruhatPoset

BruhatPoset::BruhatPoset(const AffineWeylGroup& group, std::vector<AffineWeylElement> elements)
    : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  const int n = size();
  for (int i = 0; i < n; ++i) index_.emplace(elements_[i], i);
  const std::size_t words = (static_cast<std::size_t>(n) + 63) / 64;
  below_.assign(n, std::vector<std::uint64_t>(words, 0));
  coatoms_.resize(n);
  // Canonical order is by length, so coatoms are processed first.
  for (int j = 0; j < n; ++j) {
    below_[j][j >> 6] |= std::uint64_t{1} << (j & 63);
    for (const auto& c : group.coatoms(elements_[j])) {
      auto it = index_.find(c);
      if (it == index_.end()) throw InvalidInput("element set is not closed downward");
      coatoms_[j].push_back(it->second);
      for (std::size_t w = 0; w < words; ++w) below_[j][w] |= below_[it->second][w];
    }
  }
}

int BruhatPoset::index_of(const AffineWeylElement& x) const {
  auto it = index_.find(x);
  return it == index_.end() ? -1 : it->second;
}

std::vector<int> BruhatPoset::above(int i) const {
  std::vector<int> out;
  for (int k = i; k < size(); ++k)
    if (leq(i, k)) out.push_back(k);
  return out;
}

std::vector<int> BruhatPoset::below(int j) const {
  std::vector<int> out;
  for (int k = 0; k <= j; ++k)
    if (leq(k, j)) out.push_back(k);
  return out;
}

}  // namespace affhecke
