// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "affhecke/central.hpp"
#include "affhecke/checks.hpp"
#include "affhecke/multiplicity.hpp"

using namespace affhecke;

namespace {

struct Case {
  const char* group;
  const char* mu;
};

const Case kTableCases[] = {{"GL4", "1,1,0,0"}, {"GL5", "1,1,0,0,0"},  {"GL6", "1,1,0,0,0,0"}, {"GL3", "2,2,0"},
                            {"GL3", "3,1,0"},   {"GL4", "2,0,0,0"},    {"GL4", "2,1,0,0"},     {"GSp4", "1,1,0,0"},
                            {"GSp6", "1,1,1,0,0,0"}, {"G2", "2,1,0"}};

constexpr std::uint64_t kSeed = 20240611;
constexpr int kJobs = 4;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

/// Collects failures for one criterion.
struct Criterion {
  std::string failures;
  long long cases = 0;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures.size() < 400) failures += (failures.empty() ? "" : "; ") + what;
  }
  void absorb(const CheckResult& r) {
    cases += r.cases;
    if (!r.passed && failures.size() < 400) failures += (failures.empty() ? "" : "; ") + r.name + ": " + r.detail;
  }
};

MultiplicityTable table_for(const char* group, const char* mu, int jobs = kJobs) {
  auto g = AffineWeylGroup::from_name(group);
  KLEngine engine(g);
  return compute_multiplicities(engine, g->datum().parse_coweight(mu), jobs);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LaurentPoly ones(int n) {
  LaurentPoly p;
  for (int i = 0; i <= n; ++i) p += LaurentPoly::q_power(i);
  return p;
}

void criterion_1(Criterion& c, std::string& note) {
  struct Count {
    Case c;
    std::size_t expected;
  };
  const Count counts[] = {{{"GL4", "1,1,0,0"}, 33},   {{"GL5", "1,1,0,0,0"}, 131}, {{"GL6", "1,1,0,0,0,0"}, 473},
                          {{"GL3", "2,2,0"}, 19},     {{"GL3", "3,1,0"}, 49},      {{"GL4", "2,0,0,0"}, 65},
                          {{"GL4", "2,1,0,0"}, 143},  {{"GSp4", "1,1,0,0"}, 13},   {{"GSp6", "1,1,1,0,0,0"}, 79},
                          {{"G2", "2,1,0"}, 41}};
  double total = 0, gl6 = 0;
  for (const Count& k : counts) {
    const auto t0 = Clock::now();
    auto g = AffineWeylGroup::from_name(k.c.group);
    const std::size_t n = g->adm(g->datum().parse_coweight(k.c.mu)).size();
    const double dt = seconds_since(t0);
    total += dt;
    if (std::string(k.c.group) == "GL6") gl6 = dt;
    c.expect(n == k.expected, std::string(k.c.group) + " (" + k.c.mu + "): " + std::to_string(n) + " != " +
                                  std::to_string(k.expected));
  }
  c.expect(total - gl6 < 10.0, "non-GL6 counts took " + std::to_string(total - gl6) + " s");
  c.expect(gl6 < 120.0, "GL6 count took " + std::to_string(gl6) + " s");
  std::ostringstream os;
  os.precision(3);
  os << "; " << total << " s total, GL6 " << gl6 << " s";
  note = os.str();
}

void criterion_2(Criterion& c) {
  for (const Case& k : kTableCases) {
    const MultiplicityTable t = table_for(k.group, k.mu);
    const std::string path = std::string(AFFHECKE_GOLDEN_DIR) + "/" + golden_file_name(t.group().datum(), t.mu());
    const std::string golden = read_file(path);
    c.expect(!golden.empty(), "missing " + path);
    c.expect(render_text(t) == golden, std::string(k.group) + " (" + k.mu + ") differs from " + path);
  }
}

void all_ones(Criterion& c, const char* group, const std::string& mu) {
  const MultiplicityTable t = table_for(group, mu.c_str());
  for (const auto& r : t.rows()) {
    c.expect(r.m == ones(t.top_length() - r.w.length()),
             std::string(group) + " (" + mu + ") at " + t.group().encode(r.w));
  }
}

void criterion_3(Criterion& c) {
  for (int n = 1; n <= 6; ++n) {
    std::string mu = "1";
    for (int i = 1; i < n; ++i) mu += ",0";
    all_ones(c, ("GL" + std::to_string(n)).c_str(), mu);
  }
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= a; ++b) all_ones(c, "GL2", std::to_string(a) + "," + std::to_string(b));
}

void criterion_4(Criterion& c) {
  std::vector<std::pair<std::string, std::string>> cases;
  for (int n = 2; n <= 6; ++n) {
    for (int k = 1; k < n; ++k) {
      std::string mu;
      for (int i = 0; i < n; ++i) mu += std::string(i ? "," : "") + (i < k ? "1" : "0");
      cases.emplace_back("GL" + std::to_string(n), mu);
    }
  }
  cases.emplace_back("GSp4", "1,1,0,0");
  cases.emplace_back("GSp6", "1,1,1,0,0,0");
  for (const auto& [group, mu] : cases) {
    const MultiplicityTable t = table_for(group.c_str(), mu.c_str());
    const auto& datum = t.group().datum();
    c.expect(datum.is_minuscule(t.mu()), group + " (" + mu + ") is not minuscule");
    c.expect(t.rows().front().w.length() == 0, group + " (" + mu + ") first row is not tau");
    c.expect(t.rows().front().m == minuscule_poincare(datum, t.mu()), group + " (" + mu + ")");
  }
}

void criterion_5(Criterion& c) {
  auto gl3 = AffineWeylGroup::from_name("GL3");
  auto gsp4 = AffineWeylGroup::from_name("GSp4");
  // (a)
  for (const auto& g : {gl3, gsp4}) {
    KLEngine e(g);
    c.absorb(check_r_polynomials(e, 6));
  }
  // (b), (c)
  for (const Case& k : kTableCases) {
    auto g = AffineWeylGroup::from_name(k.group);
    KLEngine e(g);
    auto table = e.table(g->adm(g->datum().parse_coweight(k.mu)), kJobs);
    table->compute_Q(kJobs);
    c.absorb(check_pq_identity(*table));
    c.absorb(check_q_recursion(*table, e));
  }
  // (d)
  for (const auto& g : {gl3, gsp4}) {
    KLEngine e(g);
    const auto ball = g->ball(6, g->identity());
    const auto& top = ball.back();
    c.expect(top.length() == 6, "interval top has length " + std::to_string(top.length()));
    c.absorb(check_qr_identity(e, top, kJobs));
  }
  // (e)
  c.absorb(check_wakimoto_closed_form(*gl3, kSeed, 200, 8));
  c.absorb(check_wakimoto_closed_form(*gsp4, kSeed + 1, 200, 8));
}

void criterion_6(Criterion& c) {
  const char* groups[] = {"GL2", "GL3", "GL4", "GSp4", "GSp6", "G2"};
  std::uint64_t seed = kSeed;
  for (const char* name : groups) {
    auto g = AffineWeylGroup::from_name(name);
    c.absorb(check_theta_independence(*g, seed++, 20));
    for (const auto& gi : g->datum().fundamental_coweights()) c.absorb(check_centrality(*g, gi, kJobs));
  }
  for (const Case& k : kTableCases) {
    auto g = AffineWeylGroup::from_name(k.group);
    c.absorb(check_kottwitz_property_P(*g, g->datum().parse_coweight(k.mu), kJobs));
  }
  for (const char* name : {"GL3", "GSp4", "G2"}) {
    auto g = AffineWeylGroup::from_name(name);
    c.absorb(check_wakimoto_property_P(*g, seed++, 40, 4));
  }
  auto gl2 = AffineWeylGroup::from_name("GL2");
  auto gl3 = AffineWeylGroup::from_name("GL3");
  KLEngine e2(gl2), e3(gl3);
  c.absorb(check_q_equals_one(e2, Coweight{1, 0}, kJobs));
  c.absorb(check_q_equals_one(e2, Coweight{2, 0}, kJobs));
  c.absorb(check_q_equals_one(e3, Coweight{1, 1, 0}, kJobs));
}

void criterion_7(Criterion& c) {
  for (const Case& k : kTableCases) {
    const PropertyReport rep = property_report(table_for(k.group, k.mu));
    const std::string where = std::string(k.group) + " (" + k.mu + ")";
    c.expect(rep.degree_bound.empty(), where + " (A)");
    c.expect(rep.palindromic.empty() && rep.unimodal.empty(), where + " (B)");
    c.expect(rep.unit_ends.empty(), where + " (C)");
    c.expect(rep.nonnegative.empty() && rep.support.empty(), where + " support/sign");
    if (rep.minuscule) {
      c.expect(rep.epsilon_sum.empty(), where + " epsilon sum");
      c.expect(rep.tau_matches_poincare, where + " m(tau)");
    }
  }
}

void criterion_8(Criterion& c) {
  const MultiplicityTable a = table_for("GL4", "2,1,0,0", 1);
  const MultiplicityTable b = table_for("GL4", "2,1,0,0", 8);
  c.expect(render_text(a) == render_text(b), "text differs");
  c.expect(render_csv(a) == render_csv(b), "csv differs");
  c.expect(render_json(a) == render_json(b), "json differs");
}

}  // namespace

int main() {
  struct Entry {
    int id;
    const char* title;
    std::function<void(Criterion&, std::string&)> run;
  };
  const std::vector<Entry> entries = {
      {1, "admissible set sizes", criterion_1},
      {2, "multiplicity tables reproduced verbatim", [](Criterion& c, std::string&) { criterion_2(c); }},
      {3, "Drinfeld case and GL2 multiplicities are all 1", [](Criterion& c, std::string&) { criterion_3(c); }},
      {4, "minuscule m(tau) equals the coset Poincare polynomial", [](Criterion& c, std::string&) { criterion_4(c); }},
      {5, "oracle equivalences (R, PQ, Q recursion, QR, Wakimoto closed form)",
       [](Criterion& c, std::string&) { criterion_5(c); }},
      {6, "central elements, Theta, property (P), q=1 specialization",
       [](Criterion& c, std::string&) { criterion_6(c); }},
      {7, "observations (A), (B), (C) and the epsilon-sum identity", [](Criterion& c, std::string&) { criterion_7(c); }},
      {8, "table output identical for 1 and 8 jobs", [](Criterion& c, std::string&) { criterion_8(c); }},
  };
  bool all = true;
  for (const Entry& e : entries) {
    Criterion c;
    std::string note;
    const auto t0 = Clock::now();
    try {
      e.run(c, note);
    } catch (const std::exception& ex) {
      c.expect(false, std::string("exception: ") + ex.what());
    }
    const bool ok = c.failures.empty();
    all = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << e.id << ": " << e.title << " (" << c.cases << " checks, "
              << static_cast<int>(seconds_since(t0) * 1000) << " ms" << note << ")";
    if (!ok) std::cout << " -- " << c.failures;
    std::cout << std::endl;
  }
  return all ? 0 : 1;
}
