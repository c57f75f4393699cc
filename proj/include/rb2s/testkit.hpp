#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rb2s/distributions.hpp"
#include "rb2s/random.hpp"
#include "rb2s/relbelief.hpp"

namespace rb2s {

/// Monte Carlo settings for one two-sample test.
struct TestConfig {
  std::size_t n_atoms = 1000;  // series truncation N
  std::size_t prior_draws = 2000;
  std::size_t posterior_draws = 2000;
  std::size_t bins = 20;  // M
  std::size_t i0 = 1;
  std::vector<double> a_values{1.0, 10.0, 20.0};
  DistSpec base_x = DistSpec::normal(0.0, 1.0);
  DistSpec base_y = DistSpec::normal(0.0, 1.0);
  /// Unequal bases invite prior-data conflict; only the conflict demo sets this.
  bool allow_unequal_bases = false;
  std::size_t n_perm = 1999;  // 0 skips the permutation baseline
  std::uint64_t master_seed = 0;
  unsigned workers = 1;  // 0 = one per hardware thread

  /// Throws std::invalid_argument on any violated constraint.
  void validate() const;

  /// Soft checks that depend on the sample sizes (a > n/2 lets the prior dominate).
  std::vector<std::string> warnings(std::size_t n1, std::size_t n2) const;
};

enum class Verdict { evidence_for, evidence_against, inconclusive };

const char* to_string(Verdict v) noexcept;

struct SweepEntry {
  double a = 1.0;
  RbSummary summary;
  DistanceSamples distances;
};

struct TestReport {
  std::vector<SweepEntry> entries;  // increasing a
  Verdict verdict = Verdict::inconclusive;
  std::optional<double> p_value;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
};

/// Prior and posterior distance draws for one concentration value.
/// Draw j uses stream key.child("prior").child(j) (resp. "posterior").
DistanceSamples draw_distances(std::span<const double> x, std::span<const double> y, double a,
                               const TestConfig& cfg, StreamKey key);

/// Full relative belief computation for one concentration value.
RbSummary run_algorithm_c(std::span<const double> x, std::span<const double> y, double a, const TestConfig& cfg,
                          StreamKey key);

/// Evidence for if every ratio is above 1, against if every ratio is below 1.
Verdict decide(std::span<const double> rb_zeros);

/// Runs every a in cfg.a_values (ascending), the verdict rule, and the
/// permutation baseline. Deterministic in (x, y, cfg) regardless of workers.
TestReport sensitivity_sweep(std::span<const double> x, std::span<const double> y, const TestConfig& cfg);

/// ½ [d(F̂x, F̂y) + d(F̂y, F̂x)] on the empirical measures.
double symmetric_cvm_statistic(std::span<const double> x, std::span<const double> y);

/// Permutation p-value (1 + #{T_perm >= T_obs}) / (1 + n_perm) for the
/// symmetric statistic. Permutation j uses key.child("perm").child(j).
double permutation_cvm_test(std::span<const double> x, std::span<const double> y, std::size_t n_perm,
                            StreamKey key, unsigned workers = 1);

}  // namespace rb2s
