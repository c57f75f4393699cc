#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rb2s {

/// Monte Carlo draws of the distance under the prior and under the posterior.
struct DistanceSamples {
  std::vector<double> prior;
  std::vector<double> posterior;

  /// Throws std::invalid_argument unless both are nonempty with values in [0, 1].
  void validate() const;
};

/// Estimated prior quantiles d_0 = 0, d_{1/M}, ..., d_1 = max prior draw.
struct QuantileGrid {
  std::vector<double> edges;  // M + 1 entries

  std::size_t bins() const noexcept { return edges.empty() ? 0 : edges.size() - 1; }
};

struct RbSummary {
  double rb_zero = 0.0;
  double strength = 0.0;
  std::vector<double> bin_rb;  // bins i0 .. M-1
  std::size_t i0 = 1;
  std::size_t bins = 20;
  std::size_t prior_draws = 0;
  std::size_t posterior_draws = 0;
};

/// Lower empirical quantiles: edge i (0 < i < M) is the order statistic of
/// rank ceil(i r / M). Throws std::invalid_argument if M < 2 or prior is empty.
QuantileGrid quantile_grid(std::span<const double> prior, std::size_t bins);

/**
 * Relative belief ratio of each bin [d_{i/M}, d_{(i+1)/M}) for i = i0..M-1:
 * M times the posterior content of the bin, since every bin holds 1/M of
 * the prior. The last bin is open-ended. A bin whose two edges coincide has
 * no prior content and gets ratio 0.
 */
std::vector<double> rb_bins(const QuantileGrid& grid, std::span<const double> posterior, std::size_t i0);

/// M times the posterior mass at or below d_{i0/M}.
double rb_zero(const QuantileGrid& grid, std::span<const double> posterior, std::size_t i0);

/**
 * Posterior probability that the distance has a ratio no greater than rb0.
 *
 * The zero region [0, d_{i0/M}) has ratio rb0 itself, so its posterior mass
 * always counts; each later bin counts when its ratio is <= rb0. Empty bins
 * are skipped.
 */
double strength(const QuantileGrid& grid, std::span<const double> posterior, std::size_t i0, double rb0);

RbSummary summarize(const DistanceSamples& samples, std::size_t bins, std::size_t i0);

}  // namespace rb2s
