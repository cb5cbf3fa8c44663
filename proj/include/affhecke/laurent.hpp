#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace affhecke {

/// Exact element of Z[v, v^-1], where v is a fixed square root of q.
///
/// Dense storage: `coeffs_[i]` is the coefficient of v^(low_ + i). The vector
/// is trimmed at both ends so that the zero polynomial is the empty vector and
/// every nonzero polynomial has nonzero extreme coefficients. Two polynomials
/// are equal iff their representations are equal.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c);  // NOLINT(google-explicit-constructor): constants embed
  LaurentPoly(const mpz_class& c);  // NOLINT(google-explicit-constructor)

  static LaurentPoly monomial(const mpz_class& c, int v_exp);
  static LaurentPoly v_power(int e) { return monomial(1, e); }
  static LaurentPoly q_power(int k) { return monomial(1, 2 * k); }
  /// q - 1
  static LaurentPoly q_minus_one();
  /// Q = q^{-1/2} - q^{1/2} = v^{-1} - v.
  static LaurentPoly big_q();
  /// Builds a polynomial in q from coefficients of q^0, q^1, ...
  static LaurentPoly from_q_coeffs(const std::vector<mpz_class>& coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  /// Lowest/highest v-exponent; only meaningful when nonzero.
  int min_exp() const { return low_; }
  int max_exp() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  mpz_class coeff(int v_exp) const;
  std::size_t num_terms() const;

  /// True iff all exponents are even, i.e. the polynomial lies in Z[q, q^-1].
  bool is_in_q() const;
  /// Coefficients of q^0..q^deg. Requires is_in_q() and min_exp() >= 0.
  std::vector<mpz_class> q_coeffs() const;

  /// v -> v^{-1}.
  LaurentPoly bar() const;
  /// Multiplies by v^k.
  LaurentPoly shifted(int k) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const mpz_class& c);
  LaurentPoly operator-() const;

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.coeffs_ == b.coeffs_;
  }

  /// Canonical encoding "c*v^e" joined by "+", ascending exponents; "0" for
  /// zero. This is the on-disk and JSON representation.
  std::string encode() const;
  static LaurentPoly decode(std::string_view text);
  /// Human-readable form in q when possible (e.g. "1 + q + 2q^2"), else in v.
  std::string pretty() const;

  /// Exact evaluation at v = point. Throws ZeroEvaluationPoint for point 0.
  mpq_class eval_v(const mpq_class& point) const;
  /// Specialization v = 1 (equivalently q = 1).
  mpz_class eval_at_one() const;

 private:
  void trim();

  int low_ = 0;
  std::vector<mpz_class> coeffs_;
};

/// Polynomial in the variable Q = v^{-1} - v; `coeffs[k]` multiplies Q^k.
struct QPolynomial {
  std::vector<mpz_class> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool has_nonnegative_coeffs() const;
  /// True iff every exponent with a nonzero coefficient has the given parity.
  bool exponents_have_parity(int parity) const;
  LaurentPoly to_laurent() const;
  std::string pretty() const;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;
};

/// Writes g = R(Q) if such an R with integer coefficients exists.
bool try_expand_in_q(const LaurentPoly& g, QPolynomial& out);

/// Finds R with f = q^alpha * R(Q), alpha = twice_alpha / 2.
/// Throws NotExpandable when no integral R exists.
QPolynomial q_expand(const LaurentPoly& f, int twice_alpha);

}  // namespace affhecke
