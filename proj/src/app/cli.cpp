#include "rb2s/app/cli.hpp"

#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "rb2s/app/catalog.hpp"
#include "rb2s/app/config.hpp"
#include "rb2s/app/density.hpp"
#include "rb2s/app/ingest.hpp"
#include "rb2s/app/records.hpp"
#include "rb2s/app/simulate.hpp"

namespace rb2s::app {
namespace {

constexpr int kUsageError = 3;
constexpr int kDataError = 4;
constexpr int kFailure = 5;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flags shared by both subcommands. Unset optionals fall through to the
// config file, then to TestConfig defaults.
struct MonteCarloFlags {
  std::optional<std::string> config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> a_list;
  std::optional<std::size_t> n_atoms;
  std::optional<std::size_t> r1;
  std::optional<std::size_t> r2;
  std::optional<std::size_t> bins;
  std::optional<std::size_t> i0;
  std::optional<std::size_t> n_perm;
  std::optional<unsigned> workers;
  std::optional<std::string> unsafe_base;
  std::optional<std::string> json_path;

  void attach(CLI::App& cmd) {
    cmd.add_option("--config", config_path, "Flat JSON file of configuration fields");
    cmd.add_option("--seed", seed, "Master seed (falls back to RB2S_SEED)");
    cmd.add_option("--a", a_list, "Comma-separated concentration values");
    cmd.add_option("--N", n_atoms, "Series truncation per random measure");
    cmd.add_option("--r1", r1, "Prior distance draws");
    cmd.add_option("--r2", r2, "Posterior distance draws");
    cmd.add_option("--M", bins, "Number of prior quantile bins");
    cmd.add_option("--i0", i0, "Index of the zero-region edge");
    cmd.add_option("--n-perm", n_perm, "Permutations for the baseline p-value (0 disables)");
    cmd.add_option("--workers", workers, "Worker threads (0 = hardware concurrency)");
    cmd.add_option("--unsafe-base", unsafe_base,
                   "Override the N(0,1) base: 'H' for both or 'H1|H2' (prior-data conflict demo)");
    cmd.add_option("--json", json_path, "Write records as JSON to this path");
  }

  // Returns the resolved config with master_seed filled in.
  TestConfig resolve(std::vector<double> default_a) const {
    TestConfig cfg;
    cfg.a_values = std::move(default_a);
    std::optional<std::uint64_t> resolved_seed;
    if (config_path) resolved_seed = apply_config_file(*config_path, cfg);
    if (a_list) cfg.a_values = parse_a_list(*a_list);
    if (n_atoms) cfg.n_atoms = *n_atoms;
    if (r1) cfg.prior_draws = *r1;
    if (r2) cfg.posterior_draws = *r2;
    if (bins) cfg.bins = *bins;
    if (i0) cfg.i0 = *i0;
    if (n_perm) cfg.n_perm = *n_perm;
    if (workers) cfg.workers = *workers;
    if (unsafe_base) apply_unsafe_base(*unsafe_base, cfg);
    if (seed) resolved_seed = seed;
    cfg.master_seed = resolve_seed(resolved_seed);
    cfg.validate();
    return cfg;
  }

  static std::uint64_t resolve_seed(std::optional<std::uint64_t> given) {
    if (given) return *given;
    if (const char* env = std::getenv("RB2S_SEED"); env != nullptr && *env != '\0') {
      try {
        std::size_t used = 0;
        const auto value = std::stoull(env, &used);
        if (used == std::string(env).size()) return value;
      } catch (const std::exception&) {
      }
      throw UsageError(std::string("RB2S_SEED is not an unsigned integer: ") + env);
    }
    if (!isatty(STDIN_FILENO)) {
      throw UsageError("no seed given: pass --seed or set RB2S_SEED (required when not interactive)");
    }
    std::random_device rd;
    const std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) | rd();
    std::cerr << "using generated seed " << seed << "\n";
    return seed;
  }
};

void write_json(const std::string& path, const nlohmann::json& doc) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  out << doc.dump(2) << "\n";
  if (!out) throw std::runtime_error(path + ": write failed");
}

std::string density_path(const std::string& path, double a, bool several) {
  if (!several) return path;
  const std::filesystem::path p(path);
  std::string stem = p.stem().string() + fmt::format("_a{}", a);
  return (p.parent_path() / (stem + p.extension().string())).string();
}

int run_test(const MonteCarloFlags& flags, const std::string& x_spec, const std::string& y_spec,
             const std::optional<std::string>& density, bool with_timing) {
  const TestConfig cfg = flags.resolve({1.0, 10.0, 20.0});
  const std::vector<double> x = load_sample(x_spec);
  const std::vector<double> y = load_sample(y_spec);
  for (const auto& w : cfg.warnings(x.size(), y.size())) std::cerr << "warning: " << w << "\n";

  const auto start = std::chrono::steady_clock::now();
  TestReport report;
  try {
    report = sensitivity_sweep(x, y, cfg);
  } catch (const std::invalid_argument& e) {
    // The config was validated above, so what remains is about the samples.
    throw IngestError(e.what());
  }
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const std::string label = "x=" + x_spec + " y=" + y_spec;
  std::cout << fmt::format("x: {} (n1={})  y: {} (n2={})  seed {}\n", x_spec, x.size(), y_spec, y.size(),
                           cfg.master_seed);
  std::cout << fmt::format("{:>8}  {:<16}  {}\n", "a", "RB(Strength)", "p-value");
  for (std::size_t k = 0; k < report.entries.size(); ++k) {
    const auto& e = report.entries[k];
    const std::string p = (k == 0 && report.p_value) ? fmt::format("{:.4f}", *report.p_value) : "";
    std::cout << fmt::format("{:>8}  {:<16}  {}\n", fmt::format("{:g}", e.a),
                             rb_cell(e.summary.rb_zero, e.summary.strength), p);
  }
  std::cout << "verdict: " << to_string(report.verdict) << "\n";

  if (density) {
    for (const auto& e : report.entries) {
      emit_density(e.distances, density_path(*density, e.a, report.entries.size() > 1));
    }
  }
  if (flags.json_path) {
    auto records = to_records(report, label, cfg.master_seed);
    if (with_timing) {
      for (auto& r : records) r.timing_ms = elapsed_ms;
    }
    write_json(*flags.json_path, nlohmann::json(records));
  }

  switch (report.verdict) {
    case Verdict::evidence_for:
      return 0;
    case Verdict::evidence_against:
      return 1;
    case Verdict::inconclusive:
      return 2;
  }
  return 2;
}

int run_simulate(const MonteCarloFlags& flags, const std::optional<std::string>& catalog_name,
                 const std::optional<std::string>& case_text, std::size_t reps) {
  if (catalog_name.has_value() == case_text.has_value()) {
    throw UsageError("simulate needs exactly one of --catalog or --case");
  }
  if (reps == 0) throw UsageError("--reps must be positive");
  const std::vector<CaseSpec> cases = catalog_name ? catalog(*catalog_name) : std::vector{parse_case(*case_text)};
  const TestConfig cfg = flags.resolve(catalog_name ? catalog_a_values(*catalog_name) : std::vector{1.0});

  std::vector<AggregateRecord> records;
  std::cout << fmt::format("{} replications per case, seed {}\n", reps, cfg.master_seed);
  std::cout << fmt::format("{:<60}  {:>6}  {:<16}  {}\n", "case", "a", "median RB(Str)", "baseline reject@0.05");
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto reports = simulate_replications(cases[i], i, cfg, reps);
    for (auto& rec : aggregate(cases[i], reports, cfg.master_seed)) {
      const std::string reject =
          rec.baseline_rejection_rate ? fmt::format("{:.2f}", *rec.baseline_rejection_rate) : "-";
      std::cout << fmt::format("{:<60}  {:>6}  {:<16}  {}\n", rec.label, fmt::format("{:g}", rec.a),
                               rb_cell(rec.median_rb_zero, rec.median_strength), reject);
      records.push_back(std::move(rec));
    }
  }
  if (flags.json_path) write_json(*flags.json_path, nlohmann::json(records));
  return 0;
}

}  // namespace

int run_cli(int argc, char** argv) {
  CLI::App app{"Relative belief two-sample test with Dirichlet process priors"};
  app.require_subcommand(1);

  MonteCarloFlags test_flags;
  std::string x_spec;
  std::string y_spec;
  std::optional<std::string> density;
  bool with_timing = false;
  auto* test = app.add_subcommand("test", "Test whether two samples share a distribution");
  test->add_option("--x", x_spec, "First sample: file path or chickwts:<group>")->required();
  test->add_option("--y", y_spec, "Second sample: file path or chickwts:<group>")->required();
  test->add_option("--emit-density", density, "Write prior/posterior distance histogram CSV");
  test->add_flag("--with-timing", with_timing, "Include wall-clock timing in JSON records");
  test_flags.attach(*test);

  MonteCarloFlags sim_flags;
  std::optional<std::string> catalog_name;
  std::optional<std::string> case_text;
  std::size_t reps = 20;
  auto* simulate = app.add_subcommand("simulate", "Replicate simulated cases and report medians");
  simulate->add_option("--catalog", catalog_name, "table1, table2 or table3");
  simulate->add_option("--case", case_text, "'<dist>|<dist>|n1|n2'");
  simulate->add_option("--reps", reps, "Replications per case")->capture_default_str();
  sim_flags.attach(*simulate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (test->parsed()) return run_test(test_flags, x_spec, y_spec, density, with_timing);
    return run_simulate(sim_flags, catalog_name, case_text, reps);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const IngestError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace rb2s::app
