#pragma once

namespace rb2s {

/// ln Γ(x) for x > 0. Throws std::domain_error otherwise.
double log_gamma_fn(double x);

/// Q(shape, x): upper regularized incomplete gamma function.
double reg_gamma_upper(double shape, double x);

/// Same as reg_gamma_upper but with x given as ln x, so arguments below the
/// smallest positive double are still usable.
double reg_gamma_upper_at_log(double shape, double log_x);

/// ln P(shape, x) and ln Q(shape, x), where P + Q = 1.
struct LogGammaTails {
  double log_lower;
  double log_upper;
};

/**
 * Inverse of the gamma(shape, 1) co-cdf, in the log domain.
 *
 * For p in (0,1) returns u = ln x with Q(shape, x) = p. Tiny shapes put
 * most quantiles far below the double range (shape 1e-3 at p = 0.5 gives
 * x ~ e^-693), so the solver never leaves log space.
 *
 * Holds ln Γ(shape) and ln Γ(shape + 1) so a sampler that inverts many
 * probabilities at one shape pays for them once.
 */
class GammaCoCdfInverse {
 public:
  explicit GammaCoCdfInverse(double shape);

  double shape() const noexcept { return shape_; }

  /// Returns ln x with Q(shape, x) = p. Throws std::domain_error unless 0 < p < 1.
  double operator()(double p) const;

  LogGammaTails tails(double log_x) const;

 private:
  double shape_;
  double log_gamma_shape_;
  double log_gamma_shape_plus_one_;
};

/// Convenience wrapper: GammaCoCdfInverse(shape)(p).
double gamma_cocdf_inverse(double shape, double p);

}  // namespace rb2s
