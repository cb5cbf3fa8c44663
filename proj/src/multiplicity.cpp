#include "affhecke/multiplicity.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>

#include "affhecke/central.hpp"
#include "affhecke/error.hpp"
#include "affhecke/parallel.hpp"
#include "json.hpp"

namespace affhecke {

namespace {

std::vector<int> config_of(const BruhatPoset& poset, int i) {
  std::vector<int> out;
  const int l = poset[i].length();
  for (int k : poset.above(i)) {
    if (k == i) continue;
    const int d = poset[k].length() - l - 1;
    if (static_cast<int>(out.size()) <= d) out.resize(d + 1, 0);
    ++out[d];
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

template <class T>
std::string join(const std::vector<T>& xs, const char* sep) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << sep;
    os << xs[i];
  }
  return os.str();
}

std::string config_str(const std::vector<int>& c) { return c.empty() ? "-" : join(c, ","); }

}  // namespace

const MultiplicityRow& MultiplicityTable::row(const AffineWeylElement& w) const {
  const int i = poset().index_of(w);
  if (i < 0) throw NotInAdm(group_->encode(w));
  return rows_[i];
}

MultiplicityTable compute_multiplicities(KLEngine& engine, const Coweight& mu, int jobs) {
  auto g = engine.group_ptr();
  const RootDatum& rd = g->datum();
  if (mu.size() != rd.dim()) throw DimensionMismatch("coweight " + mu.str() + " for " + rd.name());
  if (!rd.is_dominant(mu)) throw NotDominant(rd.format_coweight(mu));

  MultiplicityTable table(g, kottwitz_function(*g, mu, jobs));
  table.mu_ = mu;
  table.top_length_ = g->translation(mu).length();
  table.kl_ = engine.table(g->adm(mu), jobs);
  const KLTable& kl = *table.kl_;
  const BruhatPoset& poset = kl.poset();
  const int n = poset.size();

  std::vector<std::vector<int>> layers(table.top_length_ + 1);
  for (int i = 0; i < n; ++i) layers[poset[i].length()].push_back(i);

  std::vector<LaurentPoly> m(n);
  std::vector<std::vector<int>> configs(n);
  for (int l = table.top_length_; l >= 0; --l) {
    const auto& layer = layers[l];
    parallel_for(layer.size(), jobs, [&](std::size_t k) {
      const int i = layer[k];
      LaurentPoly val = table.trace_.coeff(poset[i]);
      for (int x : poset.above(i)) {
        if (x == i) continue;
        LaurentPoly term = m[x] * kl.P(i, x);
        if (poset[x].sign() < 0) {
          val += term;
        } else {
          val -= term;
        }
      }
      if (poset[i].sign() < 0) val = -val;
      m[i] = std::move(val);
      configs[i] = config_of(poset, i);
    });
  }
  table.rows_.reserve(n);
  for (int i = 0; i < n; ++i) table.rows_.push_back({poset[i], std::move(m[i]), std::move(configs[i])});
  return table;
}

std::vector<int> bruhat_config(const MultiplicityTable& table, const AffineWeylElement& w) {
  return table.row(w).bruhat_config;
}

std::vector<mpz_class> multiplicity_vector(const LaurentPoly& m) { return m.q_coeffs(); }

std::vector<SummaryRow> summarize(const MultiplicityTable& table) {
  using Key = std::tuple<int, std::vector<int>, std::vector<mpz_class>>;
  std::map<Key, int> groups;
  for (const auto& r : table.rows()) ++groups[Key{r.w.length(), r.bruhat_config, multiplicity_vector(r.m)}];
  std::vector<SummaryRow> out;
  out.reserve(groups.size());
  for (const auto& [key, count] : groups) {
    out.push_back({std::get<0>(key), count, std::get<2>(key), std::get<1>(key)});
  }
  return out;
}

LaurentPoly minuscule_poincare(const RootDatum& datum, const Coweight& mu) {
  if (!datum.is_dominant(mu)) throw NotDominant(datum.format_coweight(mu));
  if (!datum.is_minuscule(mu)) throw NotMinuscule(datum.format_coweight(mu));
  const FiniteWeylGroup& W = datum.weyl();
  std::vector<int> stab;
  for (int i = 0; i < datum.semisimple_rank(); ++i)
    if (pair(datum.simple_root(i), mu) == 0) stab.push_back(i);
  LaurentPoly out;
  for (int w = 0; w < W.size(); ++w) {
    const bool minimal = std::all_of(stab.begin(), stab.end(), [&](int i) {
      return W.length(W.right_mul_simple(w, i)) > W.length(w);
    });
    if (minimal) out += LaurentPoly::q_power(W.length(w));
  }
  return out;
}

ShapeFlags multiplicity_shape(const LaurentPoly& m, int L) {
  ShapeFlags f;
  f.palindromic = m.bar() == m.shifted(-2 * L);
  if (!m.is_in_q() || (!m.is_zero() && (m.min_exp() < 0 || m.max_exp() > 2 * L))) {
    f.degree_bound = f.unimodal = f.unit_ends = false;
    for (int e = m.min_exp(); e <= m.max_exp(); ++e)
      if (m.coeff(e) < 0) f.nonnegative = false;
    return f;
  }
  std::vector<mpz_class> c = m.q_coeffs();
  c.resize(L + 1);
  for (int i = 0; i < (L + 1) / 2; ++i)
    if (c[i] > c[i + 1]) f.unimodal = false;
  f.unit_ends = c.front() == 1 && c.back() == 1;
  f.nonnegative = std::none_of(c.begin(), c.end(), [](const mpz_class& a) { return a < 0; });
  return f;
}

bool PropertyReport::all_pass() const {
  return degree_bound.empty() && palindromic.empty() && unimodal.empty() && unit_ends.empty() &&
         nonnegative.empty() && support.empty() && epsilon_sum.empty() && tau_matches_poincare;
}

PropertyReport property_report(const MultiplicityTable& table) {
  const AffineWeylGroup& g = table.group();
  const BruhatPoset& poset = table.poset();
  PropertyReport rep;
  for (const auto& [x, c] : table.trace_function().terms()) {
    if (poset.index_of(x) < 0) rep.support.push_back(g.encode(x));
  }
  for (const auto& r : table.rows()) {
    const std::string name = g.encode(r.w);
    if (r.m.is_zero()) rep.support.push_back(name);
    const ShapeFlags f = multiplicity_shape(r.m, table.top_length() - r.w.length());
    if (!f.degree_bound) rep.degree_bound.push_back(name);
    if (!f.palindromic) rep.palindromic.push_back(name);
    if (!f.unimodal) rep.unimodal.push_back(name);
    if (!f.unit_ends) rep.unit_ends.push_back(name);
    if (!f.nonnegative) rep.nonnegative.push_back(name);
  }
  const RootDatum& rd = g.datum();
  rep.minuscule = rd.is_minuscule(table.mu());
  if (rep.minuscule) {
    const int eps_mu = table.top_length() % 2 ? -1 : 1;
    for (int i = 0; i < poset.size(); ++i) {
      int sum = 0;
      for (int k : poset.above(i)) sum += poset[k].sign();
      if (sum != eps_mu) rep.epsilon_sum.push_back(g.encode(poset[i]));
    }
    const LaurentPoly expected = minuscule_poincare(rd, table.mu());
    rep.tau_matches_poincare = !table.rows().empty() && table.rows().front().w.length() == 0 &&
                               table.rows().front().m == expected;
  }
  return rep;
}

std::vector<FingerprintGroup> fingerprint_groups(const MultiplicityTable& table) {
  const BruhatPoset& poset = table.poset();
  std::map<std::string, std::pair<int, std::set<std::string>>> groups;
  for (int i = 0; i < poset.size(); ++i) {
    const std::vector<int> up = poset.above(i);
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(up.size());
    for (int x : up) {
      int covers = 0;
      for (int y : up)
        if (poset[y].length() == poset[x].length() + 1 && poset.leq(x, y)) ++covers;
      pairs.emplace_back(poset[x].length() - poset[i].length(), covers);
    }
    std::sort(pairs.begin(), pairs.end());
    std::string fp;
    for (const auto& [l, c] : pairs) fp += std::to_string(l) + ":" + std::to_string(c) + " ";
    fp += "| " + config_str(table.rows()[i].bruhat_config);
    auto& slot = groups[fp];
    ++slot.first;
    slot.second.insert(join(multiplicity_vector(table.rows()[i].m), ","));
  }
  std::vector<FingerprintGroup> out;
  for (auto& [fp, v] : groups) out.push_back({fp, v.first, {v.second.begin(), v.second.end()}});
  return out;
}

std::string render_text(const MultiplicityTable& table) {
  const RootDatum& rd = table.group().datum();
  std::ostringstream os;
  os << "G=" << rd.name() << " mu=(" << rd.format_coweight(table.mu()) << ")\n";
  os << "Number of admissible alcoves: " << table.rows().size() << "\n";
  os << "Length | #Alcoves | Multiplicities | Bruhat configuration\n";
  for (const SummaryRow& r : summarize(table)) {
    os << "l=" << r.length << " | " << r.count << " | " << join(r.multiplicities, ",") << " | "
       << config_str(r.bruhat_config) << "\n";
  }
  return os.str();
}

std::string render_csv(const MultiplicityTable& table) {
  std::ostringstream os;
  os << "element,length,multiplicities,bruhat_config\n";
  for (const auto& r : table.rows()) {
    os << '"' << table.group().encode(r.w) << "\"," << r.w.length() << ',' << join(multiplicity_vector(r.m), ";")
       << ',' << join(r.bruhat_config, ";") << "\n";
  }
  return os.str();
}

std::string render_json(const MultiplicityTable& table, const std::map<std::string, std::string>& header) {
  using nlohmann::ordered_json;
  const RootDatum& rd = table.group().datum();
  auto numbers = [](const std::vector<mpz_class>& xs) {
    ordered_json a = ordered_json::array();
    for (const auto& x : xs) {
      if (x.fits_slong_p()) {
        a.push_back(x.get_si());
      } else {
        a.push_back(x.get_str());
      }
    }
    return a;
  };
  ordered_json j;
  j["config"] = ordered_json::object();
  for (const auto& [k, v] : header) j["config"][k] = v;
  j["group"] = rd.name();
  j["mu"] = rd.format_coweight(table.mu());
  j["adm_count"] = table.rows().size();
  j["top_length"] = table.top_length();
  ordered_json rows = ordered_json::array();
  for (const auto& r : table.rows()) {
    ordered_json o;
    o["element"] = table.group().encode(r.w);
    o["length"] = r.w.length();
    o["m"] = r.m.encode();
    o["multiplicities"] = numbers(multiplicity_vector(r.m));
    o["bruhat_config"] = r.bruhat_config;
    rows.push_back(std::move(o));
  }
  j["rows"] = std::move(rows);
  ordered_json summary = ordered_json::array();
  for (const SummaryRow& r : summarize(table)) {
    ordered_json o;
    o["length"] = r.length;
    o["count"] = r.count;
    o["multiplicities"] = numbers(r.multiplicities);
    o["bruhat_config"] = r.bruhat_config;
    summary.push_back(std::move(o));
  }
  j["summary"] = std::move(summary);
  return j.dump(2) + "\n";
}

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

int parse_int(const std::string& s, int line) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("golden line " + std::to_string(line) + ": bad integer '" + s + "'");
  }
}

}  // namespace

GoldenTable parse_golden(const std::string& text) {
  GoldenTable out;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  const std::string adm_prefix = "Number of admissible alcoves:";
  while (std::getline(is, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line.rfind("Length", 0) == 0) continue;
    if (line.rfind("G=", 0) == 0) {
      out.title = line;
    } else if (line.rfind(adm_prefix, 0) == 0) {
      out.adm_count = parse_int(trim(line.substr(adm_prefix.size())), lineno);
    } else if (line.rfind("l=", 0) == 0) {
      const auto cells = split(line, '|');
      if (cells.size() != 4) throw ParseError("golden line " + std::to_string(lineno) + ": expected 4 cells");
      SummaryRow r;
      r.length = parse_int(cells[0].substr(2), lineno);
      r.count = parse_int(cells[1], lineno);
      for (const auto& s : split(cells[2], ',')) r.multiplicities.emplace_back(parse_int(s, lineno));
      if (cells[3] != "-")
        for (const auto& s : split(cells[3], ',')) r.bruhat_config.push_back(parse_int(s, lineno));
      out.rows.push_back(std::move(r));
    } else {
      throw ParseError("golden line " + std::to_string(lineno) + ": unrecognized '" + line + "'");
    }
  }
  if (out.adm_count < 0) throw ParseError("golden table has no admissible alcove count");
  return out;
}

std::vector<std::string> compare_golden(const MultiplicityTable& table, const GoldenTable& golden) {
  std::vector<std::string> diffs;
  if (static_cast<int>(table.rows().size()) != golden.adm_count) {
    diffs.push_back("admissible alcoves: computed " + std::to_string(table.rows().size()) + ", expected " +
                    std::to_string(golden.adm_count));
  }
  const auto computed = summarize(table);
  auto show = [](const SummaryRow& r) {
    return "l=" + std::to_string(r.length) + " | " + std::to_string(r.count) + " | " + join(r.multiplicities, ",") +
           " | " + config_str(r.bruhat_config);
  };
  const std::size_t n = std::max(computed.size(), golden.rows.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (i >= computed.size()) {
      diffs.push_back("row " + std::to_string(i + 1) + ": missing, expected " + show(golden.rows[i]));
    } else if (i >= golden.rows.size()) {
      diffs.push_back("row " + std::to_string(i + 1) + ": unexpected " + show(computed[i]));
    } else if (!(computed[i] == golden.rows[i])) {
      diffs.push_back("row " + std::to_string(i + 1) + ": computed " + show(computed[i]) + ", expected " +
                      show(golden.rows[i]));
    }
  }
  return diffs;
}

std::string golden_file_name(const RootDatum& datum, const Coweight& mu) {
  std::string s = datum.format_coweight(mu);
  std::replace(s.begin(), s.end(), ',', '_');
  return datum.name() + "_" + s + ".txt";
}

}  // namespace affhecke
