#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hkmult/cache.hpp"
#include "hkmult/closed_forms.hpp"
#include "hkmult/oracle.hpp"
#include "hkmult/report.hpp"

namespace {

using namespace hkmult;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitComputation = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FormulaArgs {
  std::string family;
  std::optional<long> c, d, n, m;
  std::vector<long> ds, es;
  bool json = false;
};

struct OracleArgs {
  std::string preset;
  std::optional<long> c, d, n, m;
  std::string file;
  std::string ring = "base";
  std::string mode = "maximal-ideal";
  std::vector<long> qs;
  std::string grid;
  long qmax = 16;
  std::string order;
  std::string cache_dir;
  bool json = false;
};

long need(const std::optional<long>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing required option ") + flag);
  return *v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void print_value(const FormulaArgs& a, const json& params, const Rational& v) {
  if (a.json) {
    std::cout << json{{"family", a.family}, {"params", params}, {"value", v.to_string()}, {"approx", v.to_double()}}.dump(2)
              << "\n";
  } else {
    std::cout << v.to_string() << "\n";
  }
}

int run_formula(const FormulaArgs& a) {
  const auto& f = a.family;
  if (f == "segre" || f == "bcp-segre") {
    const long c = need(a.c, "--c");
    const long d = need(a.d, "--d");
    const json params{{"c", c}, {"d", d}};
    if (f == "segre") {
      print_value(a, params, segre_ehk({c, d}));
    } else if (a.json) {
      const Rational v = bcp_segre_ehk({c, d});
      const Rational lit = bcp_segre_literal({c, d});
      std::cout << json{{"family", f},
                        {"params", params},
                        {"value", v.to_string()},
                        {"literal_index_reading", lit.to_string()},
                        {"stirling_closed_form", segre_ehk({c, d}).to_string()},
                        {"approx", v.to_double()}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << bcp_segre_ehk({c, d}).to_string() << "\n";
    }
  } else if (f == "conca") {
    if (a.ds.empty() || a.es.empty()) throw UsageError("conca needs --ds and --es");
    print_value(a, json{{"ds", a.ds}, {"es", a.es}}, conca_ehk(a.ds, a.es));
  } else if (f == "c-of-d") {
    const long d = need(a.d, "--d");
    if (d < 1) throw UsageError("--d must be >= 1");
    print_value(a, json{{"d", d}}, c_of_d(d));
  } else if (f == "veronese-rees" || f == "veronese-rees-general") {
    const long c = need(a.c, "--c");
    const long d = need(a.d, "--d");
    const json params{{"c", c}, {"d", d}};
    print_value(a, params, f == "veronese-rees" ? veronese_rees_ehk({c, d}) : veronese_rees_ehk_general({c, d}));
  } else if (f == "ci-rees") {
    const long m = need(a.m, "--m");
    const long n = need(a.n, "--n");
    const auto v = ci_rees_values(m, n);
    if (a.json) {
      std::cout << json{{"family", f},
                        {"params", {{"m", m}, {"n", n}}},
                        {"e_rees", v.e_rees.to_string()},
                        {"ehk_rees", v.ehk_rees.to_string()},
                        {"e_extrees", v.e_extrees.to_string()},
                        {"ehk_extrees", v.ehk_extrees.to_string()}}
                       .dump(2)
                << "\n";
    } else {
      std::cout << "e_rees " << v.e_rees << "\nehk_rees " << v.ehk_rees << "\ne_extrees " << v.e_extrees
                << "\nehk_extrees " << v.ehk_extrees << "\n";
    }
  } else if (f == "stirling-table") {
    const long n = need(a.n, "--n");
    if (n < 1) throw UsageError("--n must be >= 1");
    std::vector<std::string> row;
    for (long k = 1; k <= n; ++k) row.push_back(stirling2(n, k).get_str());
    if (a.json) {
      std::cout << json{{"family", f}, {"params", {{"n", n}}}, {"row", row}}.dump(2) << "\n";
    } else {
      for (std::size_t i = 0; i < row.size(); ++i) std::cout << (i ? " " : "") << row[i];
      std::cout << "\n";
    }
  } else {
    throw UsageError("unknown formula family '" + f + "'");
  }
  return kExitOk;
}

std::vector<long> sample_grid(const OracleArgs& a) {
  if (!a.qs.empty() && !a.grid.empty()) throw UsageError("use either --q or --grid, not both");
  if (!a.qs.empty()) return a.qs;
  const std::string grid = a.grid.empty() ? "pow2" : a.grid;
  if (grid == "pow2") return power_grid(2, a.qmax);
  if (grid.rfind("primepow:", 0) == 0) {
    long p = 0;
    try {
      p = std::stol(grid.substr(9));
    } catch (const std::exception&) {
      throw UsageError("bad --grid value '" + grid + "'");
    }
    if (p < 2) throw UsageError("primepow base must be a prime");
    for (long k = 2; k * k <= p; ++k)
      if (p % k == 0) throw UsageError("primepow base must be a prime");
    return power_grid(p, a.qmax);
  }
  throw UsageError("bad --grid value '" + grid + "' (expected pow2 or primepow:p)");
}

std::optional<MonomialOrder> order_for(const OracleArgs& a, std::size_t nvars) {
  if (a.order.empty()) return std::nullopt;
  if (a.order == "lex") return MonomialOrder::lex(nvars);
  if (a.order == "grevlex") return MonomialOrder::grevlex(nvars);
  throw UsageError("--order must be lex or grevlex");
}

OracleJob build_job(const OracleArgs& a) {
  const auto& p = a.preset;
  auto engine = [&](const PresentedQuotient& pq, const std::string& name, std::optional<Rational> target) {
    return presentation_job(pq, order_for(a, pq.nvars()), name, std::move(target));
  };
  if (p == "an-hypersurface") {
    const long n = need(a.n, "--n");
    return engine(an_hypersurface(n), "an-hypersurface n=" + std::to_string(n), conca_ehk({1, 1}, {n}));
  }
  if (p == "an-extrees") {
    const long n = need(a.n, "--n");
    auto job = an_extrees_job(n);
    return engine(an_extrees(n), job.name, job.target);
  }
  if (p == "ci-rees") {
    const long m = need(a.m, "--m");
    const long n = need(a.n, "--n");
    auto job = ci_rees_job(m, n);
    return engine(ci_rees(m, n), job.name, job.target);
  }
  if (p == "ci-extrees") {
    const long m = need(a.m, "--m");
    const long n = need(a.n, "--n");
    auto job = ci_extrees_job(m, n);
    return engine(ci_extrees(m, n), job.name, job.target);
  }
  if (p == "segre") return segre_job(need(a.c, "--c"), need(a.d, "--d"));
  if (p == "veronese-rees") return veronese_rees_job(need(a.c, "--c"), need(a.d, "--d"));
  if (p == "semigroup") {
    if (a.file.empty()) throw UsageError("semigroup preset needs --file");
    const auto S = parse_semigroup(read_file(a.file));
    if (a.ring != "base" && a.ring != "extrees") throw UsageError("--ring must be base or extrees");
    return semigroup_job(S, a.ring == "base" ? SemigroupRing::Base : SemigroupRing::ExtendedRees);
  }
  if (p == "presentation") {
    if (a.file.empty()) throw UsageError("presentation preset needs --file");
    const auto pq = parse_presentation(read_file(a.file));
    return engine(pq, "presentation " + a.file, std::nullopt);
  }
  if (p == "rees-monomial") {
    if (a.file.empty()) throw UsageError("rees-monomial preset needs --file");
    if (a.mode != "maximal-ideal" && a.mode != "ideal-power") throw UsageError("--mode must be maximal-ideal or ideal-power");
    const auto I = parse_monomial_ideal(read_file(a.file));
    return rees_monomial_job(I, a.mode == "ideal-power" ? ReesMode::IdealPower : ReesMode::MaximalIdeal);
  }
  throw UsageError("unknown preset '" + p + "'");
}

int run_oracle_cmd(const OracleArgs& a) {
  const auto grid = sample_grid(a);
  const auto job = build_job(a);
  std::optional<ColengthCache> cache;
  if (!a.cache_dir.empty()) cache.emplace(a.cache_dir);
  const auto result = run_oracle(job, grid, cache ? &*cache : nullptr);
  if (a.json)
    std::cout << to_json(result).dump(2) << "\n";
  else
    std::cout << format_oracle(result);
  return kExitOk;
}

int run_check(const std::string& suite, bool as_json) {
  const auto results = run_suite(suite);
  if (as_json) {
    json arr = json::array();
    for (const auto& r : results) arr.push_back(to_json(r));
    std::cout << json{{"suite", suite}, {"failed", any_failed(results)}, {"results", arr}}.dump(2) << "\n";
  } else {
    for (const auto& r : results) std::cout << format_check(r) << "\n";
  }
  return any_failed(results) ? kExitCheckFailed : kExitOk;
}

int run_cache(const std::string& action, const std::string& dir, bool as_json) {
  if (dir.empty()) throw UsageError("cache needs --cache-dir");
  ColengthCache cache(dir);
  if (action == "clear") {
    const auto n = cache.entries().size();
    cache.clear();
    std::cout << "removed " << n << " entries\n";
    return kExitOk;
  }
  const auto entries = cache.entries();
  if (as_json) {
    json arr = json::array();
    for (const auto& e : entries) arr.push_back(to_json(e));
    std::cout << json{{"file", cache.file().string()}, {"entries", arr}, {"skipped_lines", cache.skipped_lines()}}.dump(2)
              << "\n";
  } else {
    std::cout << cache.file().string() << ": " << entries.size() << " entries\n";
    for (const auto& e : entries) std::cout << e.hash << " q=" << e.q << " count=" << e.count.get_str() << " " << e.version << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert-Kunz multiplicities: closed forms, colength oracles and check suites"};
  app.require_subcommand(1);

  FormulaArgs fa;
  auto* formula = app.add_subcommand("formula", "evaluate a closed form exactly");
  formula->add_option("family", fa.family, "segre | conca | c-of-d | veronese-rees | veronese-rees-general | ci-rees | bcp-segre | stirling-table")
      ->required();
  formula->add_option("--c", fa.c);
  formula->add_option("--d", fa.d);
  formula->add_option("--n", fa.n);
  formula->add_option("--m", fa.m);
  formula->add_option("--ds", fa.ds, "exponents of the first monomial")->delimiter(',');
  formula->add_option("--es", fa.es, "exponents of the second monomial")->delimiter(',');
  formula->add_flag("--json", fa.json);

  OracleArgs oa;
  auto* oracle = app.add_subcommand("oracle", "compute colength samples and an estimate");
  oracle->add_option("--preset", oa.preset,
                     "an-hypersurface | an-extrees | segre | veronese-rees | ci-rees | ci-extrees | semigroup | presentation | rees-monomial")
      ->required();
  oracle->add_option("--c", oa.c);
  oracle->add_option("--d", oa.d);
  oracle->add_option("--n", oa.n);
  oracle->add_option("--m", oa.m);
  oracle->add_option("--file", oa.file, "input file for semigroup, presentation and rees-monomial");
  oracle->add_option("--ring", oa.ring, "semigroup ring: base | extrees");
  oracle->add_option("--mode", oa.mode, "rees-monomial mode: maximal-ideal | ideal-power");
  oracle->add_option("--q", oa.qs, "comma-separated q values")->delimiter(',');
  oracle->add_option("--grid", oa.grid, "pow2 | primepow:p");
  oracle->add_option("--qmax", oa.qmax, "largest q on the grid");
  oracle->add_option("--order", oa.order, "lex | grevlex");
  oracle->add_option("--cache-dir", oa.cache_dir);
  oracle->add_flag("--json", oa.json);

  std::string suite;
  bool check_json = false;
  auto* check = app.add_subcommand("check", "run a check suite");
  check->add_option("--suite", suite, "theorem1 | theorem2 | cor54 | prop412 | prop57 | lemma13 | assembly | bcp-compare | all")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  check->add_flag("--json", check_json);

  std::string cache_action;
  std::string cache_dir;
  bool cache_json = false;
  auto* cache = app.add_subcommand("cache", "inspect or clear the colength cache");
  cache->add_option("action", cache_action, "inspect | clear")->required()->check(CLI::IsMember({"inspect", "clear"}));
  cache->add_option("--cache-dir", cache_dir)->required();
  cache->add_flag("--json", cache_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*formula) return run_formula(fa);
    if (*oracle) return run_oracle_cmd(oa);
    if (*check) return run_check(suite, check_json);
    if (*cache) return run_cache(cache_action, cache_dir, cache_json);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParameterError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitComputation;
  } catch (const std::exception& e) {
    std::cerr << "computation error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitUsage;
}
