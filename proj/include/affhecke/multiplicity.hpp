#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "affhecke/hecke.hpp"

namespace affhecke {

struct MultiplicityRow {
  AffineWeylElement w;
  /// m(w) = sum_i m(w, i) q^i
  LaurentPoly m;
  /// Number of admissible x > w with l(x) = l(w) + 1, l(w) + 2, ...;
  /// trailing zeros dropped.
  std::vector<int> bruhat_config;
};

/// Multiplicities of the intersection complexes IC_w(-i) in the nearby
/// cycles for mu, one row per element of Adm(mu), in canonical order.
class MultiplicityTable {
 public:
  const AffineWeylGroup& group() const { return *group_; }
  const Coweight& mu() const { return mu_; }
  /// l(t_mu)
  int top_length() const { return top_length_; }
  const std::vector<MultiplicityRow>& rows() const { return rows_; }
  const BruhatPoset& poset() const { return kl_->poset(); }
  const KLTable& kl() const { return *kl_; }
  /// The Kottwitz function the multiplicities were extracted from.
  const HeckeElement& trace_function() const { return trace_; }
  /// Throws NotInAdm.
  const MultiplicityRow& row(const AffineWeylElement& w) const;

 private:
  friend MultiplicityTable compute_multiplicities(KLEngine& engine, const Coweight& mu, int jobs);
  MultiplicityTable(std::shared_ptr<const AffineWeylGroup> g, HeckeElement trace)
      : group_(std::move(g)), trace_(std::move(trace)) {}

  std::shared_ptr<const AffineWeylGroup> group_;
  Coweight mu_;
  int top_length_ = 0;
  HeckeElement trace_;
  std::shared_ptr<KLTable> kl_;
  std::vector<MultiplicityRow> rows_;
};

/// Downward recursion on length:
/// eps_w m(w) = f_w - sum_{x > w, x in Adm(mu)} eps_x m(x) P_{w,x}
/// where f is the Kottwitz function. Throws NotDominant.
MultiplicityTable compute_multiplicities(KLEngine& engine, const Coweight& mu, int jobs = 1);

/// Bruhat configuration of w. Throws NotInAdm.
std::vector<int> bruhat_config(const MultiplicityTable& table, const AffineWeylElement& w);

/// Coefficients of q^0..q^k of m(w). Throws InvariantViolation if m(w) has
/// negative or half-integral powers of q.
std::vector<mpz_class> multiplicity_vector(const LaurentPoly& m);

struct SummaryRow {
  int length = 0;
  int count = 0;
  std::vector<mpz_class> multiplicities;
  std::vector<int> bruhat_config;

  friend bool operator==(const SummaryRow&, const SummaryRow&) = default;
};

/// Rows grouped by (length, configuration, multiplicities), sorted by the
/// same key.
std::vector<SummaryRow> summarize(const MultiplicityTable& table);

/// sum over minimal length representatives w of W / W_mu of q^{l(w)}.
/// Throws NotMinuscule.
LaurentPoly minuscule_poincare(const RootDatum& datum, const Coweight& mu);

/// Shape checks on one multiplicity polynomial with top degree L = l(t_mu) - l(w).
struct ShapeFlags {
  bool degree_bound = true;  // polynomial in q of degree <= L
  bool palindromic = true;   // bar(m) = q^{-L} m
  bool unimodal = true;      // nondecreasing up to the middle
  bool unit_ends = true;     // m(w, 0) = m(w, L) = 1
  bool nonnegative = true;
};
ShapeFlags multiplicity_shape(const LaurentPoly& m, int L);

struct PropertyReport {
  /// Elements failing each check, by encoding.
  std::vector<std::string> degree_bound;  // (A)
  std::vector<std::string> palindromic;   // (B)
  std::vector<std::string> unimodal;      // (B)
  std::vector<std::string> unit_ends;     // (C)
  std::vector<std::string> nonnegative;
  /// Elements of Adm with m = 0, or outside Adm in the trace support.
  std::vector<std::string> support;
  /// Minuscule only: elements x where sum_{w >= x} eps_w != eps_mu.
  std::vector<std::string> epsilon_sum;
  bool minuscule = false;
  /// Minuscule only: m(tau) equals the coset Poincare polynomial.
  bool tau_matches_poincare = true;

  bool all_pass() const;
};

PropertyReport property_report(const MultiplicityTable& table);

/// Informational grouping: elements with the same upper Bruhat-graph
/// fingerprint (multiset of (relative length, number of covers inside the
/// upper set) plus configuration) and the set of m values seen for it.
struct FingerprintGroup {
  std::string fingerprint;
  int count = 0;
  std::vector<std::string> multiplicity_values;
};
std::vector<FingerprintGroup> fingerprint_groups(const MultiplicityTable& table);

/// Table in the layout:
///   G=GL4 mu=(1,1,0,0)
///   Number of admissible alcoves: 33
///   Length | #Alcoves | Multiplicities | Bruhat configuration
///   l=0 | 1 | 1,1,2,1,1 | 4,10,12,6
std::string render_text(const MultiplicityTable& table);
/// One line per alcove: element,length,multiplicities,bruhat_config with
/// ';' inside list fields.
std::string render_csv(const MultiplicityTable& table);
/// Full rows and grouped summary. `header` is stored under "config".
std::string render_json(const MultiplicityTable& table, const std::map<std::string, std::string>& header = {});

struct GoldenTable {
  std::string title;
  int adm_count = -1;
  std::vector<SummaryRow> rows;
};
/// Parses the text layout above. Throws ParseError.
GoldenTable parse_golden(const std::string& text);
/// Human-readable differences; empty when the table matches.
std::vector<std::string> compare_golden(const MultiplicityTable& table, const GoldenTable& golden);
/// "GL4_1_1_0_0.txt"
std::string golden_file_name(const RootDatum& datum, const Coweight& mu);

}  // namespace affhecke
