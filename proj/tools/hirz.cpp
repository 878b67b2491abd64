// hirz: coefficients of multiplicative sequences and their series identities.
//
//   hirz coeff  --genus L --partition 2,1
//   hirz poly   --genus Ahat --k 3 --format latex
//   hirz table  --genus L --max-k 6 --format csv --out L.csv --cache L.cache.json
//   hirz verify main --k 3 --depth 200000 --tol 1e-6
//
// Exit codes: 0 success, 1 a mathematical check failed, 2 usage or config error.
// Every flag can also be set through HIRZ_<FLAG> (e.g. HIRZ_DEPTH, HIRZ_MAX_K);
// a flag given on the command line wins over the environment.

#include "hirzebruch/hirzebruch.hpp"
#include "table_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace {

using namespace hirzebruch;

// Raised for anything that is the caller's fault; maps to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::size_t depth = 0;
  double tol = 1e-6;
  double delta = 0.05;
  std::uint64_t seed = kDefaultSeed;
  unsigned threads = 1;
  std::string format;
  std::string out;

  std::string genus = "L";
  std::string genus_file;
  std::string partition;
  int k = -1;
  unsigned max_k = 0;
  unsigned max_r = 3;
  unsigned level_cap = 4;
  unsigned samples = 0;
  std::string cache;
  std::string suite;

  EvalConfig eval() const {
    EvalConfig c;
    c.depth = depth;
    c.target_tol = tol;
    c.delta = delta;
    try {
      c.validate();
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
    return c;
  }
};

std::string env_name(const std::string& flag) {
  std::string out = "HIRZ_";
  for (char ch : flag) out += ch == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  return out;
}

template <typename T>
CLI::Option* flag(CLI::App& app, const std::string& name, T& value, const std::string& help) {
  return app.add_option("--" + name, value, help)->envname(env_name(name));
}

GenusSpec load_genus(const RunConfig& rc, std::size_t order) {
  if (!rc.genus_file.empty()) {
    try {
      return io::genus_from_file(rc.genus_file);
    } catch (const std::exception& e) {
      throw ConfigError(e.what());
    }
  }
  if (rc.genus != "L" && rc.genus != "Ahat") throw ConfigError("unknown genus '" + rc.genus + "' (expected L or Ahat)");
  return GenusSpec::builtin(rc.genus, order);
}

void check_degree(const GenusSpec& g, unsigned k) {
  if (k > kMaxMonomialWeight)
    throw ConfigError("degree " + std::to_string(k) + " exceeds the closed-formula guard (" +
                      std::to_string(kMaxMonomialWeight) + ")");
  if (k > g.order())
    throw ConfigError("degree " + std::to_string(k) + " exceeds the order of the genus series (" +
                      std::to_string(g.order()) + ")");
}

// CLI11 silently drops an environment value its validator rejects; treat
// that as a usage error instead of running with the default.
void check_env_applied(const CLI::App& app) {
  for (const CLI::Option* opt : app.get_options()) {
    const std::string& name = opt->get_envname();
    if (name.empty() || opt->count() > 0) continue;
    if (const char* value = std::getenv(name.c_str()); value && *value)
      throw ConfigError(name + ": invalid value '" + value + "'");
  }
}

void emit(const RunConfig& rc, const std::string& text) {
  if (rc.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(rc.out, std::ios::binary | std::ios::trunc);
  if (!f) throw ConfigError("cannot write '" + rc.out + "'");
  f << text;
  if (!f.flush()) throw ConfigError("cannot write '" + rc.out + "'");
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : ", ") + a;
  throw ConfigError("unsupported format '" + format + "' (expected " + list + ")");
}

int cmd_coeff(RunConfig rc) {
  if (rc.format.empty()) rc.format = "text";
  require_format(rc.format, {"text", "json"});
  IntegerPartition J;
  try {
    J = IntegerPartition::parse(rc.partition);
  } catch (const std::exception& e) {
    throw ConfigError("bad partition '" + rc.partition + "': " + e.what());
  }
  if (J.length() > kMaxSetPartitionSize)
    throw ConfigError("partition length exceeds the set-partition guard (" + std::to_string(kMaxSetPartitionSize) +
                      ")");
  const GenusSpec g = load_genus(rc, std::max<std::size_t>(J.weight(), 1));
  if (J.weight() > g.order()) throw ConfigError("partition weight exceeds the order of the genus series");
  const Rational c = MultiplicativeSequence(g).coefficient(J);
  emit(rc, rc.format == "json" ? io::rational_json(c).dump() + "\n" : to_string(c) + "\n");
  return 0;
}

int cmd_poly(RunConfig rc) {
  if (rc.format.empty()) rc.format = "text";
  require_format(rc.format, {"text", "latex", "json"});
  if (rc.k < 0) throw ConfigError("--k is required");
  const unsigned k = static_cast<unsigned>(rc.k);
  const GenusSpec g = load_genus(rc, std::max(k, 1u));
  check_degree(g, k);
  const CoefficientTable t = MultiplicativeSequence(g).table(k);
  std::string text;
  if (rc.format == "text") text = render_text(t) + "\n";
  if (rc.format == "latex") text = render_latex(t) + "\n";
  if (rc.format == "json") text = io::polynomial_json(g.name, t).dump(2) + "\n";
  emit(rc, text);
  return 0;
}

int cmd_table(RunConfig rc) {
  if (rc.format.empty()) rc.format = "csv";
  require_format(rc.format, {"csv", "json"});
  if (rc.max_k == 0) throw ConfigError("--max-k must be at least 1");
  const GenusSpec g = load_genus(rc, rc.max_k);
  check_degree(g, rc.max_k);

  std::map<unsigned, CoefficientTable> cached;
  if (!rc.cache.empty()) {
    io::CacheLoad load = io::load_cache(rc.cache, g);
    if (load.status == io::CacheStatus::Corrupt)
      std::cerr << "warning: cache '" << rc.cache << "' is corrupt (" << load.reason << "); recomputing\n";
    cached = std::move(load.tables);
  }

  MultiplicativeSequence seq(g);
  std::vector<CoefficientTable> tables;
  bool computed = false;
  for (unsigned k = 1; k <= rc.max_k; ++k) {
    if (auto it = cached.find(k); it != cached.end()) {
      tables.push_back(it->second);
    } else {
      tables.push_back(seq.table(k));
      computed = true;
    }
  }

  if (!rc.cache.empty() && (computed || cached.size() != rc.max_k)) {
    std::vector<CoefficientTable> all = tables;
    for (const auto& [k, t] : cached)
      if (k > rc.max_k) all.push_back(t);
    std::ofstream f(rc.cache, std::ios::binary | std::ios::trunc);
    if (!f) throw ConfigError("cannot write cache '" + rc.cache + "'");
    f << io::cache_json(g, all).dump(2) << "\n";
  }

  emit(rc, rc.format == "csv" ? io::tables_csv(tables) : io::tables_json(g.name, tables).dump(2) + "\n");
  return 0;
}

int cmd_verify(RunConfig rc) {
  if (rc.format.empty()) rc.format = "text";
  require_format(rc.format, {"text"});
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), rc.suite) == names.end()) throw ConfigError("unknown suite '" + rc.suite + "'");
  if (rc.threads == 0 || rc.threads > 256) throw ConfigError("--threads must be in 1..256");

  SuiteConfig cfg;
  cfg.eval = rc.eval();
  cfg.k = rc.k < 0 ? 0 : static_cast<unsigned>(rc.k);
  if (rc.k == 0) throw ConfigError("--k must be at least 1");
  cfg.max_k = rc.max_k;
  cfg.max_r = rc.max_r;
  cfg.level_cap = rc.level_cap;
  cfg.samples = rc.samples;
  cfg.seed = rc.seed;
  cfg.threads = rc.threads;

  const unsigned top = cfg.k ? cfg.k : cfg.max_k;
  auto limit = [&](unsigned value, unsigned lo, unsigned hi, const char* what) {
    if (value < lo || value > hi)
      throw ConfigError(std::string(what) + " must be in " + std::to_string(lo) + ".." + std::to_string(hi) +
                        " for suite " + rc.suite);
  };
  if (rc.suite == "main" || rc.suite == "ahat") limit(top ? top : 4, 1, 6, "degree");
  if (rc.suite == "oracle") limit(top ? top : kMaxOracleDegree, 1, kMaxOracleDegree, "degree");
  if (rc.suite == "signs") limit(top ? top : 12, 1, kMaxMonomialWeight, "degree");
  if (rc.suite == "hoffman" || rc.suite == "multiple-eta" || rc.suite == "positivity") limit(cfg.max_r, 1, 6, "--max-r");
  if (rc.suite == "formal") {
    limit(cfg.max_r, 1, 4, "--max-r");
    limit(cfg.level_cap, 1, 64, "--n");
  }

  std::ostringstream report;
  report << "# verify " << rc.suite << " seed=" << cfg.seed
         << " depth=" << (rc.depth ? std::to_string(rc.depth) : std::string("auto")) << " tol=" << CheckLine::num(rc.tol)
         << " delta=" << CheckLine::num(rc.delta) << "\n";
  const auto lines = run_checks(build_suite(rc.suite, cfg), cfg.threads);
  std::size_t passed = 0, errors = 0;
  for (const auto& line : lines) {
    report << line.format() << "\n";
    if (line.error) {
      ++errors;
      std::cerr << "error: " << line.message << "\n";
    }
    passed += line.pass;
  }
  report << "# " << passed << "/" << lines.size() << " passed\n";
  emit(rc, report.str());
  if (errors) return 2;
  return passed == lines.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact coefficients of multiplicative sequences and numeric checks of their series identities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hirz 1.0");
  RunConfig rc;

  flag(app, "depth", rc.depth, "truncation depth N for numeric series (0 = automatic)");
  flag(app, "tol", rc.tol, "target tolerance for numeric checks")->check(CLI::PositiveNumber);
  flag(app, "delta", rc.delta, "convergence margin: every exponent must be >= 1 + delta");
  flag(app, "seed", rc.seed, "seed for sampled tuples (default " + std::to_string(kDefaultSeed) + ")");
  flag(app, "threads", rc.threads, "worker threads for verify");
  flag(app, "format", rc.format, "output format (coeff: text|json, poly: text|latex|json, table: csv|json)");
  flag(app, "out", rc.out, "write output to this file instead of stdout");

  auto genus_flags = [&](CLI::App* sub) {
    flag(*sub, "genus", rc.genus, "L or Ahat");
    flag(*sub, "genus-file", rc.genus_file, "JSON file {\"name\": .., \"b\": [b_0, b_1, ..]} defining a custom genus")
        ->check(CLI::ExistingFile);
  };

  CLI::App* coeff = app.add_subcommand("coeff", "print one coefficient as an exact rational");
  genus_flags(coeff);
  flag(*coeff, "partition", rc.partition, "partition as a comma list, e.g. 2,1")->required();

  CLI::App* poly = app.add_subcommand("poly", "print the degree-k polynomial");
  genus_flags(poly);
  flag(*poly, "k", rc.k, "degree")->required()->check(CLI::NonNegativeNumber);

  CLI::App* table = app.add_subcommand("table", "write every coefficient of degree <= max-k");
  genus_flags(table);
  flag(*table, "max-k", rc.max_k, "largest degree")->required();
  flag(*table, "cache", rc.cache, "JSON cache reused across runs");

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", rc.suite, "main, ahat, hoffman, multiple-eta, positivity, formal, oracle or signs")
      ->required()
      ->envname("HIRZ_SUITE");
  flag(*verify, "k", rc.k, "single degree");
  flag(*verify, "max-k", rc.max_k, "largest degree (suite default when omitted)");
  flag(*verify, "max-r", rc.max_r, "largest tuple length / set size");
  flag(*verify, "n", rc.level_cap, "level cap N for formal identities");
  flag(*verify, "samples", rc.samples, "sampled tuples per length (suite default when omitted)");

  for (CLI::App* sub : {coeff, poly, table, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    check_env_applied(app);
    for (CLI::App* sub : app.get_subcommands()) check_env_applied(*sub);
    if (*coeff) return cmd_coeff(rc);
    if (*poly) return cmd_poly(rc);
    if (*table) return cmd_table(rc);
    if (*verify) return cmd_verify(rc);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
