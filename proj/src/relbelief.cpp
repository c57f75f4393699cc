#include "rb2s/relbelief.hpp"

#include <algorithm>
#include <stdexcept>

namespace rb2s {
namespace {

void check_index(const QuantileGrid& grid, std::size_t i0) {
  if (grid.bins() < 2) throw std::invalid_argument("quantile grid needs at least 2 bins");
  if (i0 < 1 || i0 >= grid.bins()) throw std::invalid_argument("i0 must satisfy 1 <= i0 < M");
}

// Posterior counts at or below each edge, plus the bin layout. Working in
// integer counts keeps the ratio comparisons in strength() exact.
struct BinCounts {
  std::size_t total = 0;
  std::size_t below_zero_edge = 0;     // #posterior <= d_{i0/M}
  std::vector<std::size_t> in_bin;     // bins i0 .. M-1
  std::vector<bool> empty;             // bin has zero prior content
};

BinCounts count_bins(const QuantileGrid& grid, std::span<const double> posterior, std::size_t i0) {
  check_index(grid, i0);
  if (posterior.empty()) throw std::invalid_argument("posterior sample is empty");
  std::vector<double> sorted(posterior.begin(), posterior.end());
  std::sort(sorted.begin(), sorted.end());
  auto count_le = [&](double t) {
    return static_cast<std::size_t>(std::upper_bound(sorted.begin(), sorted.end(), t) - sorted.begin());
  };

  const std::size_t m = grid.bins();
  BinCounts out;
  out.total = sorted.size();
  out.below_zero_edge = count_le(grid.edges[i0]);
  for (std::size_t i = i0; i < m; ++i) {
    const std::size_t lower = count_le(grid.edges[i]);
    const bool last = i + 1 == m;
    const std::size_t upper = last ? out.total : count_le(grid.edges[i + 1]);
    const bool empty = !last && grid.edges[i + 1] == grid.edges[i];
    out.in_bin.push_back(upper - lower);
    out.empty.push_back(empty);
  }
  return out;
}

}  // namespace

void DistanceSamples::validate() const {
  if (prior.empty() || posterior.empty()) throw std::invalid_argument("distance samples must be nonempty");
  auto in_range = [](double d) { return d >= 0.0 && d <= 1.0; };
  if (!std::all_of(prior.begin(), prior.end(), in_range) ||
      !std::all_of(posterior.begin(), posterior.end(), in_range)) {
    throw std::invalid_argument("distance samples must lie in [0, 1]");
  }
}

QuantileGrid quantile_grid(std::span<const double> prior, std::size_t bins) {
  if (bins < 2) throw std::invalid_argument("quantile grid needs M >= 2");
  if (prior.empty()) throw std::invalid_argument("prior sample is empty");
  std::vector<double> sorted(prior.begin(), prior.end());
  std::sort(sorted.begin(), sorted.end());

  const std::size_t r = sorted.size();
  QuantileGrid grid;
  grid.edges.resize(bins + 1);
  grid.edges[0] = 0.0;
  for (std::size_t i = 1; i < bins; ++i) {
    const std::size_t rank = std::max<std::size_t>(1, (i * r + bins - 1) / bins);
    grid.edges[i] = sorted[rank - 1];
  }
  grid.edges[bins] = sorted.back();
  return grid;
}

std::vector<double> rb_bins(const QuantileGrid& grid, std::span<const double> posterior, std::size_t i0) {
  const BinCounts counts = count_bins(grid, posterior, i0);
  const double scale = static_cast<double>(grid.bins()) / static_cast<double>(counts.total);
  std::vector<double> out;
  out.reserve(counts.in_bin.size());
  for (std::size_t k = 0; k < counts.in_bin.size(); ++k) {
    out.push_back(counts.empty[k] ? 0.0 : scale * static_cast<double>(counts.in_bin[k]));
  }
  return out;
}

double rb_zero(const QuantileGrid& grid, std::span<const double> posterior, std::size_t i0) {
  const BinCounts counts = count_bins(grid, posterior, i0);
  return static_cast<double>(grid.bins()) * static_cast<double>(counts.below_zero_edge) /
         static_cast<double>(counts.total);
}

double strength(const QuantileGrid& grid, std::span<const double> posterior, std::size_t i0, double rb0) {
  const BinCounts counts = count_bins(grid, posterior, i0);
  const double m = static_cast<double>(grid.bins());
  const double r = static_cast<double>(counts.total);
  // Compare in count units: bin ratio M c / r <= rb0  <=>  c <= rb0 r / M.
  // Exact for rb0 produced by rb_zero(); the slack absorbs rounding of rb0.
  const double threshold = rb0 * r / m + 1e-9;

  std::size_t qualifying = counts.below_zero_edge;
  for (std::size_t k = 0; k < counts.in_bin.size(); ++k) {
    if (!counts.empty[k] && static_cast<double>(counts.in_bin[k]) <= threshold) qualifying += counts.in_bin[k];
  }
  return std::min(1.0, static_cast<double>(qualifying) / r);
}

RbSummary summarize(const DistanceSamples& samples, std::size_t bins, std::size_t i0) {
  samples.validate();
  const QuantileGrid grid = quantile_grid(samples.prior, bins);
  RbSummary out;
  out.i0 = i0;
  out.bins = bins;
  out.prior_draws = samples.prior.size();
  out.posterior_draws = samples.posterior.size();
  out.bin_rb = rb_bins(grid, samples.posterior, i0);
  out.rb_zero = rb_zero(grid, samples.posterior, i0);
  out.strength = strength(grid, samples.posterior, i0, out.rb_zero);
  return out;
}

}  // namespace rb2s
