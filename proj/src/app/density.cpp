#include "rb2s/app/density.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include <fmt/format.h>

namespace rb2s::app {

DensityTable density_table(const DistanceSamples& samples, std::size_t bins) {
  samples.validate();
  if (bins == 0) throw std::invalid_argument("density needs at least one bin");
  const double top = std::max(*std::max_element(samples.prior.begin(), samples.prior.end()),
                              *std::max_element(samples.posterior.begin(), samples.posterior.end()));
  // All-zero samples still get a well-defined grid.
  const double upper = top > 0.0 ? top : 1.0;

  DensityTable t;
  t.bin_width = upper / static_cast<double>(bins);
  t.centers.resize(bins);
  for (std::size_t b = 0; b < bins; ++b) t.centers[b] = (static_cast<double>(b) + 0.5) * t.bin_width;

  auto histogram = [&](const std::vector<double>& values) {
    std::vector<double> density(bins, 0.0);
    for (double v : values) {
      const auto b = std::min(bins - 1, static_cast<std::size_t>(v / t.bin_width));
      density[b] += 1.0;
    }
    const double norm = static_cast<double>(values.size()) * t.bin_width;
    for (double& d : density) d /= norm;
    return density;
  };
  t.prior_density = histogram(samples.prior);
  t.posterior_density = histogram(samples.posterior);
  return t;
}

void emit_density(const DistanceSamples& samples, const std::filesystem::path& path) {
  const DensityTable t = density_table(samples);
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path.string() + ": cannot open for writing");
  out << "distance,prior_density,posterior_density\n";
  for (std::size_t b = 0; b < t.centers.size(); ++b) {
    out << fmt::format("{},{},{}\n", t.centers[b], t.prior_density[b], t.posterior_density[b]);
  }
  if (!out) throw std::runtime_error(path.string() + ": write failed");
}

}  // namespace rb2s::app
