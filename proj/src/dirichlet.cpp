#include "rb2s/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "rb2s/gamma.hpp"

namespace rb2s {

DiscreteMeasure::DiscreteMeasure(std::vector<double> atoms, std::vector<double> weights) {
  if (atoms.size() != weights.size()) throw std::invalid_argument("atoms and weights differ in length");
  if (atoms.empty()) throw std::invalid_argument("a discrete measure needs at least one atom");

  std::vector<std::size_t> order(atoms.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (!std::is_sorted(atoms.begin(), atoms.end())) {
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return atoms[a] < atoms[b]; });
  }

  atoms_.reserve(atoms.size());
  weights_.reserve(atoms.size());
  cumulative_.reserve(atoms.size());
  double total = 0.0;
  for (std::size_t i : order) {
    if (!std::isfinite(atoms[i])) throw std::invalid_argument("atoms must be finite");
    if (!(weights[i] >= 0.0)) throw std::invalid_argument("weights must be nonnegative");
    atoms_.push_back(atoms[i]);
    weights_.push_back(weights[i]);
    total += weights[i];
    cumulative_.push_back(total);
  }
  if (std::fabs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("weights sum to " + std::to_string(total) + ", expected 1");
  }
}

DiscreteMeasure DiscreteMeasure::empirical(std::span<const double> data) {
  if (data.empty()) throw std::invalid_argument("empirical measure of an empty sample");
  std::vector<double> atoms(data.begin(), data.end());
  std::vector<double> weights(data.size(), 1.0 / static_cast<double>(data.size()));
  return DiscreteMeasure(std::move(atoms), std::move(weights));
}

double DiscreteMeasure::cdf_at(double t) const {
  const auto it = std::upper_bound(atoms_.begin(), atoms_.end(), t);
  if (it == atoms_.begin()) return 0.0;
  return cumulative_[static_cast<std::size_t>(it - atoms_.begin()) - 1];
}

BaseMeasure BaseMeasure::posterior_mixture(double prior_weight, DistSpec analytic, std::vector<double> data) {
  if (!(prior_weight > 0.0 && prior_weight <= 1.0)) {
    throw std::invalid_argument("posterior prior weight must lie in (0, 1]");
  }
  if (data.empty()) throw std::invalid_argument("posterior base needs data");
  return BaseMeasure(PosteriorMixture{prior_weight, std::move(analytic), std::move(data)});
}

DpPrior::DpPrior(double concentration, BaseMeasure base) : concentration_(concentration), base_(std::move(base)) {
  if (!(concentration > 0.0) || !std::isfinite(concentration)) {
    throw std::invalid_argument("concentration must be positive and finite");
  }
}

DpPrior posterior(const DpPrior& prior, std::span<const double> data) {
  if (data.empty()) throw std::invalid_argument("posterior update needs at least one observation");
  const auto* analytic = std::get_if<DistSpec>(&prior.base().kind());
  if (analytic == nullptr) throw std::invalid_argument("posterior update needs an analytic prior base");
  for (double v : data) {
    if (!std::isfinite(v)) throw std::invalid_argument("observations must be finite");
  }
  const double a = prior.concentration();
  const double n = static_cast<double>(data.size());
  return DpPrior(a + n, BaseMeasure::posterior_mixture(a / (a + n), *analytic,
                                                       std::vector<double>(data.begin(), data.end())));
}

double sample_base(const BaseMeasure& base, RandomStream& stream) {
  if (const auto* dist = std::get_if<DistSpec>(&base.kind())) return sample(*dist, stream);
  const auto& mix = std::get<PosteriorMixture>(base.kind());
  if (mix.prior_weight >= 1.0 || stream.uniform01() < mix.prior_weight) return sample(mix.analytic, stream);
  std::uniform_int_distribution<std::size_t> pick(0, mix.data.size() - 1);
  return mix.data[pick(stream)];
}

SeriesDraw sample_series(const DpPrior& prior, std::size_t n_atoms, RandomStream& stream) {
  if (n_atoms == 0) throw std::invalid_argument("series truncation N must be at least 1");

  SeriesDraw draw;
  draw.atoms.resize(n_atoms);
  if (const auto* dist = std::get_if<DistSpec>(&prior.base().kind())) {
    sample_n(*dist, stream, draw.atoms);
  } else {
    for (double& y : draw.atoms) y = sample_base(prior.base(), stream);
  }

  draw.gammas.resize(n_atoms + 1);
  std::exponential_distribution<double> unit_exp(1.0);
  double running = 0.0;
  for (double& g : draw.gammas) {
    running += unit_exp(stream);
    g = running;
  }

  const GammaCoCdfInverse inverse(prior.concentration() / static_cast<double>(n_atoms));
  constexpr double p_min = std::numeric_limits<double>::min();
  const double p_max = std::nextafter(1.0, 0.0);
  const double total = draw.gammas.back();
  draw.log_raw_weights.resize(n_atoms);
  for (std::size_t i = 0; i < n_atoms; ++i) {
    const double p = std::clamp(draw.gammas[i] / total, p_min, p_max);
    double log_g = inverse(p);
    // The exact map is decreasing in i; clip root-finder noise between near-equal p.
    if (i > 0) log_g = std::min(log_g, draw.log_raw_weights[i - 1]);
    draw.log_raw_weights[i] = log_g;
  }

  const double shift = *std::max_element(draw.log_raw_weights.begin(), draw.log_raw_weights.end());
  if (!std::isfinite(shift)) throw DegenerateDrawError("every series weight is zero");
  draw.weights.resize(n_atoms);
  double norm = 0.0;
  for (std::size_t i = 0; i < n_atoms; ++i) {
    draw.weights[i] = std::exp(draw.log_raw_weights[i] - shift);
    norm += draw.weights[i];
  }
  for (double& w : draw.weights) w /= norm;
  return draw;
}

DiscreteMeasure sample_dp(const DpPrior& prior, std::size_t n_atoms, RandomStream& stream) {
  SeriesDraw draw = sample_series(prior, n_atoms, stream);
  return DiscreteMeasure(std::move(draw.atoms), std::move(draw.weights));
}

}  // namespace rb2s
