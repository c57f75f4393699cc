#pragma once

#include <filesystem>
#include <vector>

#include "rb2s/relbelief.hpp"

namespace rb2s::app {

/// Equal-width histogram densities of the prior and posterior distances
/// over [0, max of both samples].
struct DensityTable {
  double bin_width = 0.0;
  std::vector<double> centers;
  std::vector<double> prior_density;
  std::vector<double> posterior_density;
};

DensityTable density_table(const DistanceSamples& samples, std::size_t bins = 200);

/// Writes "distance,prior_density,posterior_density" CSV. Throws
/// std::runtime_error if the file cannot be written.
void emit_density(const DistanceSamples& samples, const std::filesystem::path& path);

}  // namespace rb2s::app
