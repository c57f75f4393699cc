#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "rb2s/distributions.hpp"
#include "rb2s/random.hpp"

namespace rb2s {

/**
 * Finite atoms-plus-weights probability measure.
 *
 * Atoms are kept sorted ascending together with the running sum of weights,
 * so the right-continuous CDF is one binary search. Duplicate atoms are
 * kept as separate entries.
 */
class DiscreteMeasure {
 public:
  /// Sorts by atom. Throws std::invalid_argument on mismatched sizes, empty
  /// input, non-finite atoms, negative weights, or total weight off 1 by > 1e-9.
  DiscreteMeasure(std::vector<double> atoms, std::vector<double> weights);

  /// Uniform weights 1/n on the data points.
  static DiscreteMeasure empirical(std::span<const double> data);

  std::size_t size() const noexcept { return atoms_.size(); }
  std::span<const double> atoms() const noexcept { return atoms_; }
  std::span<const double> weights() const noexcept { return weights_; }

  /// Total weight of atoms <= t.
  double cdf_at(double t) const;

 private:
  std::vector<double> atoms_;
  std::vector<double> weights_;
  std::vector<double> cumulative_;
};

inline double cdf_at(const DiscreteMeasure& m, double t) { return m.cdf_at(t); }

/// Intermediate quantities of one truncated-series draw, in series order
/// (not sorted by atom).
struct SeriesDraw {
  std::vector<double> gammas;           // Γ_1 .. Γ_{N+1}
  std::vector<double> atoms;            // Y_1 .. Y_N
  std::vector<double> log_raw_weights;  // ln of the gamma co-cdf inverse at Γ_i / Γ_{N+1}
  std::vector<double> weights;          // normalized J_i
};

/// H_x = w H + (1 - w) F_n, with w = a / (a + n).
struct PosteriorMixture {
  double prior_weight;
  DistSpec analytic;
  std::vector<double> data;
};

class BaseMeasure {
 public:
  using Kind = std::variant<DistSpec, PosteriorMixture>;

  static BaseMeasure analytic(DistSpec dist) { return BaseMeasure(std::move(dist)); }
  /// Requires prior_weight in (0, 1] and nonempty data.
  static BaseMeasure posterior_mixture(double prior_weight, DistSpec analytic, std::vector<double> data);

  const Kind& kind() const noexcept { return kind_; }
  bool is_analytic() const noexcept { return std::holds_alternative<DistSpec>(kind_); }

 private:
  explicit BaseMeasure(Kind kind) : kind_(std::move(kind)) {}

  Kind kind_;
};

/// DP(a, H).
class DpPrior {
 public:
  DpPrior(double concentration, BaseMeasure base);

  double concentration() const noexcept { return concentration_; }
  const BaseMeasure& base() const noexcept { return base_; }

 private:
  double concentration_;
  BaseMeasure base_;
};

class DegenerateDrawError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Conjugate update: DP(a, H) given data is DP(a + n, H_x).
DpPrior posterior(const DpPrior& prior, std::span<const double> data);

double sample_base(const BaseMeasure& base, RandomStream& stream);

/**
 * Draws the N-term series approximation of DP(a, H).
 *
 * Y_i ~ H; Γ_i are partial sums of N + 1 unit exponentials; the raw weight of
 * term i is the gamma(a/N) co-cdf inverse at Γ_i / Γ_{N+1}. Raw weights are
 * kept as logs and normalized with max subtraction, so terms whose weight
 * underflows after the shift get exactly 0.
 */
SeriesDraw sample_series(const DpPrior& prior, std::size_t n_atoms, RandomStream& stream);

/// sample_series() paired up and sorted into a measure.
DiscreteMeasure sample_dp(const DpPrior& prior, std::size_t n_atoms, RandomStream& stream);

}  // namespace rb2s
