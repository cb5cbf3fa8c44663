#include "affhecke/laurent.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "affhecke/error.hpp"

namespace affhecke {

LaurentPoly::LaurentPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

LaurentPoly::LaurentPoly(const mpz_class& c) {
  if (c != 0) coeffs_.push_back(c);
}

LaurentPoly LaurentPoly::monomial(const mpz_class& c, int v_exp) {
  LaurentPoly p(c);
  if (!p.is_zero()) p.low_ = v_exp;
  return p;
}

LaurentPoly LaurentPoly::q_minus_one() { return q_power(1) - LaurentPoly(1); }

LaurentPoly LaurentPoly::big_q() { return v_power(-1) - v_power(1); }

LaurentPoly LaurentPoly::from_q_coeffs(const std::vector<mpz_class>& coeffs) {
  LaurentPoly p;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    p += monomial(coeffs[k], 2 * static_cast<int>(k));
  }
  return p;
}

void LaurentPoly::trim() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_ = std::vector<mpz_class>(coeffs_.begin() + first, coeffs_.begin() + last);
    low_ += static_cast<int>(first);
  }
}

mpz_class LaurentPoly::coeff(int v_exp) const {
  if (is_zero() || v_exp < low_ || v_exp > max_exp()) return 0;
  return coeffs_[v_exp - low_];
}

std::size_t LaurentPoly::num_terms() const {
  return static_cast<std::size_t>(
      std::count_if(coeffs_.begin(), coeffs_.end(), [](const mpz_class& c) { return c != 0; }));
}

bool LaurentPoly::is_in_q() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0 && ((low_ + static_cast<int>(i)) % 2 != 0)) return false;
  }
  return true;
}

std::vector<mpz_class> LaurentPoly::q_coeffs() const {
  if (is_zero()) return {};
  if (!is_in_q() || low_ < 0) {
    throw InvariantViolation("q_coeffs: " + encode() + " is not a polynomial in q");
  }
  std::vector<mpz_class> out(max_exp() / 2 + 1);
  for (int e = low_; e <= max_exp(); e += 1) {
    if (e % 2 == 0) out[e / 2] = coeffs_[e - low_];
  }
  return out;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly r;
  if (is_zero()) return r;
  r.coeffs_.assign(coeffs_.rbegin(), coeffs_.rend());
  r.low_ = -max_exp();
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.low_ += k;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(max_exp(), o.max_exp());
  if (lo < low_ || hi > max_exp()) {
    std::vector<mpz_class> grown(hi - lo + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) grown[low_ - lo + i].swap(coeffs_[i]);
    coeffs_.swap(grown);
    low_ = lo;
  }
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[o.low_ - low_ + i] += o.coeffs_[i];
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.low_ = a.low_ + b.low_;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(r.coeffs_[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  r.trim();
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const mpz_class& c) {
  if (c == 0) return *this = LaurentPoly();
  for (auto& x : coeffs_) x *= c;
  return *this;
}

std::string LaurentPoly::encode() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += '+';
    out += coeffs_[i].get_str();
    out += "*v^";
    out += std::to_string(low_ + static_cast<int>(i));
  }
  return out;
}

namespace {

int parse_int(std::string_view s, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad exponent in Laurent polynomial '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

LaurentPoly LaurentPoly::decode(std::string_view text) {
  if (text == "0") return {};
  LaurentPoly out;
  std::size_t pos = 0;
  int prev_exp = 0;
  bool first = true;
  while (pos <= text.size()) {
    // A term ends at the next '+' that is not the sign of a coefficient, i.e.
    // one that follows an exponent digit.
    std::size_t end = pos;
    std::size_t star = text.find("*v^", pos);
    if (star == std::string_view::npos) {
      throw ParseError("malformed Laurent polynomial '" + std::string(text) + "'");
    }
    end = text.find('+', star);
    if (end == std::string_view::npos) end = text.size();
    std::string_view coeff_text = text.substr(pos, star - pos);
    std::string_view exp_text = text.substr(star + 3, end - star - 3);
    mpz_class c;
    if (coeff_text.empty() || c.set_str(std::string(coeff_text), 10) != 0 || c == 0) {
      throw ParseError("bad coefficient in Laurent polynomial '" + std::string(text) + "'");
    }
    const int e = parse_int(exp_text, text);
    if (!first && e <= prev_exp) {
      throw ParseError("exponents not strictly ascending in '" + std::string(text) + "'");
    }
    out += monomial(c, e);
    prev_exp = e;
    first = false;
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::string LaurentPoly::pretty() const {
  if (is_zero()) return "0";
  const bool in_q = is_in_q();
  const char* var = in_q ? "q" : "v";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    int e = low_ + static_cast<int>(i);
    if (in_q) e /= 2;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << var;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

mpq_class LaurentPoly::eval_v(const mpq_class& point) const {
  if (point == 0) throw ZeroEvaluationPoint("cannot evaluate at v = 0");
  mpq_class acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * point + coeffs_[i];
  // acc = sum_i c_i point^i; multiply by point^low_.
  mpq_class scale = 1;
  const int n = low_ < 0 ? -low_ : low_;
  for (int k = 0; k < n; ++k) scale *= point;
  if (low_ < 0) acc /= scale;
  else acc *= scale;
  acc.canonicalize();
  return acc;
}

mpz_class LaurentPoly::eval_at_one() const {
  mpz_class s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

bool QPolynomial::has_nonnegative_coeffs() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const mpz_class& c) { return c >= 0; });
}

bool QPolynomial::exponents_have_parity(int parity) const {
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0 && static_cast<int>(k % 2) != (parity & 1)) return false;
  }
  return true;
}

namespace {

// (v^{-1} - v)^k expanded.
LaurentPoly big_q_power(int k) {
  LaurentPoly r(1);
  const LaurentPoly q = LaurentPoly::big_q();
  for (int i = 0; i < k; ++i) r *= q;
  return r;
}

}  // namespace

LaurentPoly QPolynomial::to_laurent() const {
  LaurentPoly r;
  LaurentPoly power(1);
  const LaurentPoly q = LaurentPoly::big_q();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) r += power * LaurentPoly(coeffs[k]);
    power *= q;
  }
  return r;
}

std::string QPolynomial::pretty() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const mpz_class& c = coeffs[k];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << '-';
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << 'Q';
    if (k != 1) os << '^' << k;
  }
  return os.str();
}

bool try_expand_in_q(const LaurentPoly& g, QPolynomial& out) {
  // R(Q) of degree k spans v^{-k}..v^{k}, with v^{-k} coefficient equal to
  // the leading coefficient of R. Peel off the top Q-power repeatedly.
  out.coeffs.clear();
  LaurentPoly rest = g;
  while (!rest.is_zero()) {
    const int k = -rest.min_exp();
    if (k < 0 || rest.max_exp() > k) return false;
    if (out.coeffs.empty()) out.coeffs.assign(k + 1, mpz_class(0));
    if (k >= static_cast<int>(out.coeffs.size())) return false;
    const mpz_class c = rest.coeff(-k);
    out.coeffs[k] = c;
    LaurentPoly term = big_q_power(k);
    term *= c;
    rest -= term;
  }
  while (!out.coeffs.empty() && out.coeffs.back() == 0) out.coeffs.pop_back();
  return true;
}

QPolynomial q_expand(const LaurentPoly& f, int twice_alpha) {
  QPolynomial r;
  if (!try_expand_in_q(f.shifted(-twice_alpha), r)) {
    throw NotExpandable(f.encode() + " is not q^(" + std::to_string(twice_alpha) +
                        "/2) times an integral polynomial in Q");
  }
  return r;
}

}  // namespace affhecke
