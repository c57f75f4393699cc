#include "rb2s/testkit.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "rb2s/cvm.hpp"
#include "rb2s/dirichlet.hpp"
#include "rb2s/parallel.hpp"

namespace rb2s {
namespace {

void check_sample(std::span<const double> s, const char* name) {
  if (s.size() < 2) throw std::invalid_argument(std::string(name) + " needs at least 2 observations");
  for (double v : s) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(name) + " contains a non-finite value");
  }
}

void check_samples(std::span<const double> x, std::span<const double> y) {
  check_sample(x, "x");
  check_sample(y, "y");
  const double first = x.front();
  auto same = [first](double v) { return v == first; };
  if (std::all_of(x.begin(), x.end(), same) && std::all_of(y.begin(), y.end(), same)) {
    throw std::invalid_argument("degenerate input: every observation in x and y has the same value");
  }
}

// Pooled sample sorted once; each relabeling is then a linear scan.
class PooledScan {
 public:
  PooledScan(std::span<const double> x, std::span<const double> y) : n1_(x.size()), n2_(y.size()) {
    std::vector<std::pair<double, bool>> pooled;
    pooled.reserve(n1_ + n2_);
    for (double v : x) pooled.emplace_back(v, true);
    for (double v : y) pooled.emplace_back(v, false);
    std::stable_sort(pooled.begin(), pooled.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    labels_.reserve(pooled.size());
    for (std::size_t k = 0; k < pooled.size(); ++k) {
      labels_.push_back(pooled[k].second ? 1 : 0);
      if (k + 1 == pooled.size() || pooled[k + 1].first != pooled[k].first) group_ends_.push_back(k + 1);
    }
  }

  const std::vector<char>& observed_labels() const { return labels_; }

  // labels[k] != 0 when sorted position k belongs to x.
  double statistic(const std::vector<char>& labels) const {
    const double inv1 = 1.0 / static_cast<double>(n1_);
    const double inv2 = 1.0 / static_cast<double>(n2_);
    std::size_t cx = 0;
    std::size_t cy = 0;
    double x_weighted = 0.0;  // d(F̂y, F̂x): integrates against x
    double y_weighted = 0.0;  // d(F̂x, F̂y): integrates against y
    std::size_t start = 0;
    for (std::size_t end : group_ends_) {
      std::size_t gx = 0;
      for (std::size_t k = start; k < end; ++k) gx += labels[k] ? 1 : 0;
      const std::size_t gy = (end - start) - gx;
      cx += gx;
      cy += gy;
      const double diff = static_cast<double>(cx) * inv1 - static_cast<double>(cy) * inv2;
      x_weighted += static_cast<double>(gx) * inv1 * diff * diff;
      y_weighted += static_cast<double>(gy) * inv2 * diff * diff;
      start = end;
    }
    return 0.5 * (x_weighted + y_weighted);
  }

 private:
  std::size_t n1_;
  std::size_t n2_;
  std::vector<char> labels_;
  std::vector<std::size_t> group_ends_;
};

}  // namespace

void TestConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
  };
  require(n_atoms >= 1, "N must be at least 1");
  require(prior_draws >= 1 && posterior_draws >= 1, "r1 and r2 must be positive");
  require(bins >= 2, "M must be at least 2");
  require(i0 >= 1 && i0 < bins, "i0 must satisfy 1 <= i0 < M");
  require(!a_values.empty(), "at least one concentration value is required");
  for (double a : a_values) require(std::isfinite(a) && a > 0.0, "concentration values must be positive");
  require(allow_unequal_bases || base_x == base_y,
          "unequal base measures cause prior-data conflict; use the unsafe-base option to force them");
}

std::vector<std::string> TestConfig::warnings(std::size_t n1, std::size_t n2) const {
  std::vector<std::string> out;
  const double cap = 0.5 * static_cast<double>(std::min(n1, n2));
  for (double a : a_values) {
    if (a > cap) {
      out.push_back("concentration " + std::to_string(a) + " exceeds half the smaller sample size (" +
                    std::to_string(cap) + "); the prior may dominate");
    }
  }
  if (!(base_x == base_y)) out.emplace_back("unequal base measures: expect prior-data conflict");
  return out;
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::evidence_for:
      return "evidence_for";
    case Verdict::evidence_against:
      return "evidence_against";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

DistanceSamples draw_distances(std::span<const double> x, std::span<const double> y, double a,
                               const TestConfig& cfg, StreamKey key) {
  check_samples(x, y);
  const DpPrior prior_x(a, BaseMeasure::analytic(cfg.base_x));
  const DpPrior prior_y(a, BaseMeasure::analytic(cfg.base_y));
  const DpPrior post_x = posterior(prior_x, x);
  const DpPrior post_y = posterior(prior_y, y);

  DistanceSamples out;
  out.prior.resize(cfg.prior_draws);
  out.posterior.resize(cfg.posterior_draws);

  const StreamKey prior_key = key.child("prior");
  parallel_for(cfg.prior_draws, cfg.workers, [&](std::size_t j) {
    RandomStream stream(prior_key.child(j));
    const DiscreteMeasure p = sample_dp(prior_x, cfg.n_atoms, stream);
    const DiscreteMeasure q = sample_dp(prior_y, cfg.n_atoms, stream);
    out.prior[j] = cvm_distance(p, q);
  });

  const StreamKey post_key = key.child("posterior");
  parallel_for(cfg.posterior_draws, cfg.workers, [&](std::size_t j) {
    RandomStream stream(post_key.child(j));
    const DiscreteMeasure p = sample_dp(post_x, cfg.n_atoms, stream);
    const DiscreteMeasure q = sample_dp(post_y, cfg.n_atoms, stream);
    out.posterior[j] = cvm_distance(p, q);
  });
  return out;
}

RbSummary run_algorithm_c(std::span<const double> x, std::span<const double> y, double a, const TestConfig& cfg,
                          StreamKey key) {
  return summarize(draw_distances(x, y, a, cfg, key), cfg.bins, cfg.i0);
}

Verdict decide(std::span<const double> rb_zeros) {
  if (rb_zeros.empty()) return Verdict::inconclusive;
  if (std::all_of(rb_zeros.begin(), rb_zeros.end(), [](double r) { return r > 1.0; })) {
    return Verdict::evidence_for;
  }
  if (std::all_of(rb_zeros.begin(), rb_zeros.end(), [](double r) { return r < 1.0; })) {
    return Verdict::evidence_against;
  }
  return Verdict::inconclusive;
}

TestReport sensitivity_sweep(std::span<const double> x, std::span<const double> y, const TestConfig& cfg) {
  cfg.validate();
  check_samples(x, y);

  std::vector<double> a_values = cfg.a_values;
  std::sort(a_values.begin(), a_values.end());

  const StreamKey root(cfg.master_seed);
  TestReport report;
  report.n1 = x.size();
  report.n2 = y.size();
  std::vector<double> rb_zeros;
  for (std::size_t k = 0; k < a_values.size(); ++k) {
    SweepEntry entry;
    entry.a = a_values[k];
    entry.distances = draw_distances(x, y, entry.a, cfg, root.child(k));
    entry.summary = summarize(entry.distances, cfg.bins, cfg.i0);
    rb_zeros.push_back(entry.summary.rb_zero);
    report.entries.push_back(std::move(entry));
  }
  report.verdict = decide(rb_zeros);
  if (cfg.n_perm > 0) report.p_value = permutation_cvm_test(x, y, cfg.n_perm, root, cfg.workers);
  return report;
}

double symmetric_cvm_statistic(std::span<const double> x, std::span<const double> y) {
  check_sample(x, "x");
  check_sample(y, "y");
  const PooledScan scan(x, y);
  return scan.statistic(scan.observed_labels());
}

double permutation_cvm_test(std::span<const double> x, std::span<const double> y, std::size_t n_perm,
                            StreamKey key, unsigned workers) {
  check_sample(x, "x");
  check_sample(y, "y");
  if (n_perm == 0) throw std::invalid_argument("n_perm must be positive");

  const PooledScan scan(x, y);
  const double observed = scan.statistic(scan.observed_labels());
  // Relative slack so relabelings with a mathematically equal statistic count as ties.
  const double cutoff = observed * (1.0 - 1e-12);

  std::vector<char> exceeds(n_perm, 0);
  const StreamKey perm_key = key.child("perm");
  parallel_for(n_perm, workers, [&](std::size_t j) {
    RandomStream stream(perm_key.child(j));
    std::vector<char> labels(x.size() + y.size(), 0);
    std::fill(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(x.size()), 1);
    std::shuffle(labels.begin(), labels.end(), stream);
    exceeds[j] = scan.statistic(labels) >= cutoff ? 1 : 0;
  });
  const auto count = static_cast<double>(std::accumulate(exceeds.begin(), exceeds.end(), std::size_t{0}));
  return (1.0 + count) / (1.0 + static_cast<double>(n_perm));
}

}  // namespace rb2s
