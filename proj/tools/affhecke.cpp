// Command-line front end: multiplicity tables, single-object queries and
// check suites.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "affhecke/central.hpp"
#include "affhecke/checks.hpp"
#include "affhecke/error.hpp"
#include "affhecke/multiplicity.hpp"
#include "affhecke/wakimoto.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using namespace affhecke;
using nlohmann::ordered_json;

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitInvariant = 3;

struct Options {
  int jobs = 1;
  std::string cache_dir;
  bool no_cache = false;
  std::string format = "text";
  std::string golden_dir;
  std::uint64_t seed = 42;

  std::string group;
  std::string mu;
  std::string lam;
  std::string lam1;
  std::string lam2;
  std::vector<std::string> elements;
};

int effective_jobs(const Options& o) {
  if (o.jobs > 0) return o.jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

fs::path cache_dir(const Options& o) {
  if (!o.cache_dir.empty()) return o.cache_dir;
  if (const char* env = std::getenv("AFFHECKE_CACHE_DIR"); env && *env) return env;
  return ".klcache";
}

fs::path golden_dir(const Options& o) {
  if (!o.golden_dir.empty()) return o.golden_dir;
  if (const char* env = std::getenv("AFFHECKE_GOLDEN_DIR"); env && *env) return env;
  return AFFHECKE_DEFAULT_GOLDEN_DIR;
}

/// KL engine with the on-disk cache loaded before use and saved afterwards.
class CachedEngine {
 public:
  CachedEngine(std::shared_ptr<const AffineWeylGroup> g, const Options& o) : engine_(std::move(g)) {
    if (o.no_cache) return;
    file_ = cache_dir(o) / KLEngine::cache_file_name(engine_.group());
    engine_.load_cache(*file_);
    loaded_ = engine_.memo_size();
  }
  ~CachedEngine() {
    if (!file_ || engine_.memo_size() == loaded_) return;
    try {
      fs::create_directories(file_->parent_path());
      engine_.save_cache(*file_);
    } catch (const std::exception& e) {
      std::cerr << "warning: could not write KL cache: " << e.what() << "\n";
    }
  }
  KLEngine& operator*() { return engine_; }
  KLEngine* operator->() { return &engine_; }

 private:
  KLEngine engine_;
  std::optional<fs::path> file_;
  std::size_t loaded_ = 0;
};

std::shared_ptr<const AffineWeylGroup> group_of(const Options& o) {
  if (o.group.empty()) throw InvalidInput("a group such as GL4, GSp4 or G2 is required");
  return AffineWeylGroup::from_name(o.group);
}

Coweight coweight_arg(const AffineWeylGroup& g, const std::string& text, const char* flag) {
  if (text.empty()) throw InvalidInput(std::string("missing ") + flag);
  return g.datum().parse_coweight(text);
}

/// "t[...]*w[...]" encodings, or words in the simple affine reflections
/// such as "s0.s1" ("e" for the identity).
AffineWeylElement element_arg(const AffineWeylGroup& g, const std::string& text) {
  if (text.rfind("t[", 0) == 0) return g.decode(text);
  return g.from_word(g.identity(), g.parse_affine_word(text));
}

ordered_json config_json(const std::string& command, const Options& o) {
  ordered_json c;
  c["command"] = command;
  if (!o.group.empty()) c["group"] = o.group;
  c["format"] = o.format;
  return c;
}

std::string csv_quote(const std::string& s) { return "\"" + s + "\""; }

void emit_polynomial(const std::string& command, const Options& o, const AffineWeylGroup& g,
                     const AffineWeylElement& x, const AffineWeylElement& y, const LaurentPoly& p) {
  if (o.format == "json") {
    ordered_json j;
    j["config"] = config_json(command, o);
    j["x"] = g.encode(x);
    j["y"] = g.encode(y);
    j["value"] = p.encode();
    j["pretty"] = p.pretty();
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "x,y,value\n" << csv_quote(g.encode(x)) << "," << csv_quote(g.encode(y)) << "," << p.encode() << "\n";
  } else {
    std::cout << p.pretty() << "\n";
  }
}

void emit_element(const std::string& command, const Options& o, const HeckeElement& h, ordered_json extra = {}) {
  const AffineWeylGroup& g = h.group();
  if (o.format == "json") {
    ordered_json j;
    j["config"] = config_json(command, o);
    for (auto& [k, v] : extra.items()) j[k] = v;
    ordered_json terms = ordered_json::object();
    for (const auto& [x, c] : h.terms()) terms[g.encode(x)] = c.encode();
    j["terms"] = std::move(terms);
    std::cout << j.dump(2) << "\n";
  } else if (o.format == "csv") {
    std::cout << "element,length,coefficient\n";
    for (const auto& [x, c] : h.terms()) std::cout << csv_quote(g.encode(x)) << "," << x.length() << "," << c.encode() << "\n";
  } else {
    for (const auto& [x, c] : h.terms()) std::cout << g.encode(x) << "\t" << c.pretty() << "\n";
  }
}

int emit_checks(const std::string& command, const Options& o, const std::vector<CheckResult>& results) {
  bool ok = true;
  for (const auto& r : results) ok = ok && r.passed;
  if (o.format == "json") {
    ordered_json j;
    j["config"] = config_json(command, o);
    ordered_json arr = ordered_json::array();
    for (const auto& r : results) {
      arr.push_back({{"name", r.name}, {"passed", r.passed}, {"cases", r.cases}, {"detail", r.detail}});
    }
    j["checks"] = std::move(arr);
    j["passed"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases)";
      if (!r.passed) std::cout << ": " << r.detail;
      std::cout << "\n";
    }
    std::cout << (ok ? "all checks passed" : "some checks FAILED") << "\n";
  }
  return ok ? 0 : kExitCheckFailed;
}

int cmd_table(const Options& o) {
  auto g = group_of(o);
  const Coweight mu = coweight_arg(*g, o.mu, "--mu");
  CachedEngine engine(g, o);
  const MultiplicityTable t = compute_multiplicities(*engine, mu, effective_jobs(o));
  if (o.format == "json") {
    std::cout << render_json(t, {{"command", "table"}, {"group", o.group}, {"mu", g->datum().format_coweight(mu)}});
  } else if (o.format == "csv") {
    std::cout << render_csv(t);
  } else {
    std::cout << render_text(t);
  }
  return 0;
}

int cmd_query(const std::string& kind, const Options& o) {
  auto g = group_of(o);
  const int jobs = effective_jobs(o);
  auto need = [&](std::size_t n) {
    if (o.elements.size() != n) {
      throw InvalidInput("query " + kind + " expects " + std::to_string(n) + " element argument(s)");
    }
  };
  if (kind == "kl" || kind == "invkl" || kind == "rpoly") {
    need(2);
    const AffineWeylElement x = element_arg(*g, o.elements[0]);
    const AffineWeylElement y = element_arg(*g, o.elements[1]);
    CachedEngine engine(g, o);
    LaurentPoly p;
    if (kind == "kl") p = engine->P(x, y, jobs);
    if (kind == "invkl") p = engine->Q(x, y, jobs);
    if (kind == "rpoly") p = engine->R(x, y);
    emit_polynomial("query " + kind, o, *g, x, y, p);
    return 0;
  }
  if (kind == "adm") {
    const Coweight mu = coweight_arg(*g, o.mu, "--mu");
    const auto adm = g->adm(mu);
    if (o.format == "json") {
      ordered_json j;
      j["config"] = config_json("query adm", o);
      j["mu"] = g->datum().format_coweight(mu);
      j["count"] = adm.size();
      ordered_json arr = ordered_json::array();
      for (const auto& x : adm) arr.push_back(g->encode(x));
      j["elements"] = std::move(arr);
      std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
      std::cout << "element,length\n";
      for (const auto& x : adm) std::cout << csv_quote(g->encode(x)) << "," << x.length() << "\n";
    } else {
      for (const auto& x : adm) std::cout << g->encode(x) << "\n";
    }
    return 0;
  }
  if (kind == "theta") {
    HeckeElement h(*g);
    Coweight lam;
    if (!o.lam1.empty() || !o.lam2.empty()) {
      const Coweight a = coweight_arg(*g, o.lam1, "--lam1");
      const Coweight b = coweight_arg(*g, o.lam2, "--lam2");
      lam = a - b;
      if (!o.lam.empty() && coweight_arg(*g, o.lam, "--lam") != lam) {
        throw InvalidInput("--lam1 - --lam2 differs from --lam");
      }
      h = theta(*g, a, b);
    } else {
      lam = coweight_arg(*g, o.lam, "--lam");
      h = theta(*g, lam);
    }
    emit_element("query theta", o, h, {{"lam", g->datum().format_coweight(lam)}});
    return 0;
  }
  if (kind == "z") {
    const Coweight lam = coweight_arg(*g, o.lam, "--lam");
    emit_element("query z", o, central_z(*g, lam, jobs), {{"lam", g->datum().format_coweight(lam)}});
    return 0;
  }
  if (kind == "kottwitz") {
    const Coweight mu = coweight_arg(*g, o.mu, "--mu");
    emit_element("query kottwitz", o, kottwitz_function(*g, mu, jobs), {{"mu", g->datum().format_coweight(mu)}});
    return 0;
  }
  if (kind == "wakimoto") {
    need(2);
    const AffineWeylElement v = element_arg(*g, o.elements[0]);
    const AffineWeylElement w = element_arg(*g, o.elements[1]);
    const WakimotoFunction f = wakimoto_function(v, w);
    // Coefficients of T~_x as polynomials in Q.
    std::vector<std::pair<AffineWeylElement, QPolynomial>> rs;
    for (const auto& [x, c] : f.tilde_product.terms()) {
      QPolynomial r;
      if (!try_expand_in_q(c.shifted(x.length()), r)) throw InvariantViolation("coefficient is not a polynomial in Q");
      rs.emplace_back(x, r);
    }
    if (o.format == "json") {
      ordered_json j;
      j["config"] = config_json("query wakimoto", o);
      j["v"] = g->encode(v);
      j["w"] = g->encode(w);
      ordered_json tilde = ordered_json::object();
      for (const auto& [x, r] : rs) tilde[g->encode(x)] = r.pretty();
      j["tilde_coefficients"] = std::move(tilde);
      ordered_json terms = ordered_json::object();
      for (const auto& [x, c] : f.normalized.terms()) terms[g->encode(x)] = c.encode();
      j["normalized"] = std::move(terms);
      std::cout << j.dump(2) << "\n";
    } else if (o.format == "csv") {
      std::cout << "element,length,tilde_coefficient,normalized_coefficient\n";
      for (const auto& [x, r] : rs) {
        std::cout << csv_quote(g->encode(x)) << "," << x.length() << "," << csv_quote(r.pretty()) << ","
                  << f.normalized.coeff(x).encode() << "\n";
      }
    } else {
      for (const auto& [x, r] : rs) std::cout << g->encode(x) << "\t" << r.pretty() << "\n";
    }
    return 0;
  }
  throw InvalidInput("unknown query kind '" + kind + "'");
}

std::vector<CheckResult> golden_checks(const Options& o, const fs::path& file) {
  std::ifstream in(file);
  if (!in) throw InvalidInput("cannot read golden file " + file.string());
  std::stringstream ss;
  ss << in.rdbuf();
  const GoldenTable golden = parse_golden(ss.str());
  // Title "G=GL4 mu=(1,1,0,0)".
  const auto& title = golden.title;
  const auto sp = title.find(" mu=(");
  if (title.rfind("G=", 0) != 0 || sp == std::string::npos || title.back() != ')') {
    throw ParseError("golden title '" + title + "' in " + file.string());
  }
  auto g = AffineWeylGroup::from_name(title.substr(2, sp - 2));
  const Coweight mu = g->datum().parse_coweight(title.substr(sp + 5, title.size() - sp - 6));
  CachedEngine engine(g, o);
  const MultiplicityTable t = compute_multiplicities(*engine, mu, effective_jobs(o));
  const auto diffs = compare_golden(t, golden);
  CheckResult r{"golden " + file.filename().string()};
  r.cases = static_cast<long long>(golden.rows.size());
  r.passed = diffs.empty();
  for (const auto& d : diffs) r.detail += (r.detail.empty() ? "" : "; ") + d;
  std::vector<CheckResult> out{r};
  CheckResult bytes{"golden " + file.filename().string() + " byte-identical rendering"};
  bytes.cases = 1;
  bytes.passed = render_text(t) == ss.str();
  if (!bytes.passed) bytes.detail = "rendered text differs";
  out.push_back(bytes);
  return out;
}

int cmd_check(const std::string& suite, const Options& o) {
  const int jobs = effective_jobs(o);
  if (suite == "oracles") return emit_checks("check oracles", o, oracle_suite(o.seed, jobs));
  if (suite == "golden") {
    const fs::path dir = golden_dir(o);
    std::vector<CheckResult> results;
    if (!o.group.empty()) {
      auto g = group_of(o);
      const Coweight mu = coweight_arg(*g, o.mu, "--mu");
      const fs::path file = dir / golden_file_name(g->datum(), mu);
      if (!fs::exists(file)) throw InvalidInput("no golden table " + file.string());
      results = golden_checks(o, file);
    } else {
      if (!fs::is_directory(dir)) throw InvalidInput("golden directory " + dir.string() + " not found");
      std::vector<fs::path> files;
      for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".txt") files.push_back(e.path());
      std::sort(files.begin(), files.end());
      for (const auto& f : files) {
        auto r = golden_checks(o, f);
        results.insert(results.end(), r.begin(), r.end());
      }
    }
    return emit_checks("check golden", o, results);
  }
  if (suite == "properties") {
    auto g = group_of(o);
    const Coweight mu = coweight_arg(*g, o.mu, "--mu");
    CachedEngine engine(g, o);
    const MultiplicityTable t = compute_multiplicities(*engine, mu, jobs);
    const PropertyReport rep = property_report(t);
    auto from_list = [](const std::string& name, const std::vector<std::string>& bad, long long cases) {
      CheckResult r{name};
      r.cases = cases;
      r.passed = bad.empty();
      if (!bad.empty()) r.detail = std::to_string(bad.size()) + " failing, first " + bad.front();
      return r;
    };
    const long long n = static_cast<long long>(t.rows().size());
    std::vector<CheckResult> results{
        from_list("(A) degree bound", rep.degree_bound, n),
        from_list("(B) palindromic", rep.palindromic, n),
        from_list("(B) unimodal", rep.unimodal, n),
        from_list("(C) unit endpoints", rep.unit_ends, n),
        from_list("nonnegative multiplicities", rep.nonnegative, n),
        from_list("support equals Adm", rep.support, n),
    };
    if (rep.minuscule) {
      results.push_back(from_list("epsilon sum identity", rep.epsilon_sum, n));
      CheckResult tau{"m(tau) equals the coset Poincare polynomial"};
      tau.cases = 1;
      tau.passed = rep.tau_matches_poincare;
      if (!tau.passed) tau.detail = "mismatch";
      results.push_back(tau);
    }
    results.push_back(check_kottwitz_property_P(*g, mu, jobs));
    std::map<AffineWeylElement, LaurentPoly> coeffs;
    for (const auto& r : t.rows()) coeffs[r.w] = r.m;
    CheckResult base{"multiplicities re-expand to the Kottwitz function"};
    base.cases = n;
    base.passed = from_c_basis(*g, coeffs, *engine, jobs) == t.trace_function();
    if (!base.passed) base.detail = "re-expansion differs";
    results.push_back(base);
    const int rc = emit_checks("check properties", o, results);
    if (o.format != "json") {
      const auto groups = fingerprint_groups(t);
      const auto single = std::count_if(groups.begin(), groups.end(),
                                        [](const FingerprintGroup& f) { return f.multiplicity_values.size() == 1; });
      std::cout << "info: " << groups.size() << " upper Bruhat-graph fingerprints, " << single
                << " with a single multiplicity polynomial\n";
    }
    return rc;
  }
  throw InvalidInput("unknown check suite '" + suite + "'");
}

void add_common(CLI::App* app, Options& o) {
  app->add_option("-j,--jobs", o.jobs, "Worker threads (0 = all cores)")->capture_default_str();
  app->add_option("--cache-dir", o.cache_dir, "KL cache directory (default $AFFHECKE_CACHE_DIR or .klcache)");
  app->add_flag("--no-cache", o.no_cache, "Do not read or write the KL cache");
  app->add_option("-f,--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "csv", "json"}))
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multiplicities of nearby cycles on local models via affine Hecke algebras"};
  app.require_subcommand(1);
  Options o;
  std::string kind;
  std::string suite;

  auto* table = app.add_subcommand("table", "Grouped multiplicity table for a group and coweight");
  table->add_option("group", o.group, "GLn, GSpn or G2")->required();
  table->add_option("--mu", o.mu, "Dominant coweight, e.g. 1,1,0,0")->required();
  add_common(table, o);

  auto* query = app.add_subcommand("query", "Single polynomials, elements or sets");
  query->add_option("kind", kind, "kl, invkl, rpoly, theta, z, kottwitz, adm or wakimoto")
      ->required()
      ->check(CLI::IsMember({"kl", "invkl", "rpoly", "theta", "z", "kottwitz", "adm", "wakimoto"}));
  query->add_option("group", o.group, "GLn, GSpn or G2")->required();
  query->add_option("elements", o.elements, "Elements as t[..]*w[..] encodings or words like s0.s1");
  query->add_option("--mu", o.mu, "Dominant coweight");
  query->add_option("--lam", o.lam, "Coweight");
  query->add_option("--lam1", o.lam1, "Dominant part of an explicit decomposition");
  query->add_option("--lam2", o.lam2, "Dominant part subtracted");
  add_common(query, o);

  auto* check = app.add_subcommand("check", "Run a check suite; exit 0 iff everything passes");
  check->add_option("suite", suite, "properties, oracles or golden")
      ->required()
      ->check(CLI::IsMember({"properties", "oracles", "golden"}));
  check->add_option("group", o.group, "Group (golden: optional, default all tables)");
  check->add_option("--mu", o.mu, "Dominant coweight");
  check->add_option("--seed", o.seed, "Random seed for the oracle suite")->capture_default_str();
  check->add_option("--golden-dir", o.golden_dir, "Directory of golden tables");
  add_common(check, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInvalidInput;
  }

  try {
    if (*table) return cmd_table(o);
    if (*query) return cmd_query(kind, o);
    if (*check) return cmd_check(suite, o);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  } catch (const InvariantViolation& e) {
    std::cerr << "invariant violation: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
  return 0;
}
