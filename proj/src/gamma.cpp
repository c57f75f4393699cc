#include "rb2s/gamma.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rb2s {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr int kMaxTerms = 100000;

void check_shape(double shape) {
  if (!(shape > 0.0) || !std::isfinite(shape)) {
    throw std::domain_error("gamma shape must be positive and finite, got " + std::to_string(shape));
  }
}

// ln of the series sum in P(k,x) = x^k e^{-x} / Γ(k) * sum, valid for x < k + 1.
double log_lower_series(double shape, double x) {
  double term = 1.0 / shape;
  double sum = term;
  double ap = shape;
  for (int n = 0; n < kMaxTerms; ++n) {
    ap += 1.0;
    term *= x / ap;
    sum += term;
    if (term < sum * kEps) return std::log(sum);
  }
  throw std::runtime_error("incomplete gamma series did not converge");
}

// ln of the continued fraction in Q(k,x) = x^k e^{-x} / Γ(k) * cf, valid for x >= k + 1.
double log_upper_fraction(double shape, double x) {
  constexpr double tiny = std::numeric_limits<double>::min() / kEps;
  double b = x + 1.0 - shape;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxTerms; ++i) {
    const double an = -i * (i - shape);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < kEps) return std::log(h);
  }
  throw std::runtime_error("incomplete gamma continued fraction did not converge");
}

// ln(1 - e^v) for v <= 0.
double log1m_exp(double v) {
  if (v >= 0.0) return -kInf;
  return v > -M_LN2 ? std::log(-std::expm1(v)) : std::log1p(-std::exp(v));
}

}  // namespace

double log_gamma_fn(double x) {
  if (!(x > 0.0)) throw std::domain_error("log_gamma_fn requires x > 0, got " + std::to_string(x));
  return std::lgamma(x);
}

GammaCoCdfInverse::GammaCoCdfInverse(double shape)
    : shape_(shape),
      log_gamma_shape_((check_shape(shape), log_gamma_fn(shape))),
      log_gamma_shape_plus_one_(log_gamma_fn(shape + 1.0)) {}

LogGammaTails GammaCoCdfInverse::tails(double log_x) const {
  if (std::isnan(log_x)) throw std::domain_error("incomplete gamma evaluated at NaN");
  if (log_x == -kInf) return {-kInf, 0.0};
  const double x = std::exp(log_x);
  if (x == kInf) return {0.0, -kInf};

  const double log_prefactor = shape_ * log_x - x - log_gamma_shape_;
  if (x < shape_ + 1.0) {
    const double log_lower = std::min(0.0, log_prefactor + log_lower_series(shape_, x));
    return {log_lower, log1m_exp(log_lower)};
  }
  const double log_upper = std::min(0.0, log_prefactor + log_upper_fraction(shape_, x));
  return {log1m_exp(log_upper), log_upper};
}

double GammaCoCdfInverse::operator()(double p) const {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::domain_error("gamma_cocdf_inverse requires 0 < p < 1, got " + std::to_string(p));
  }

  // Small-x closed form: P(k, x) = x^k / Γ(k + 1) * (1 + O(x)). The exact
  // root differs from it by less than x in log space, so below 1e-13 it is
  // already the answer.
  const double log_lower_target = std::log1p(-p);
  double u = (log_lower_target + log_gamma_shape_plus_one_) / shape_;
  if (u < std::log(1e-13)) return u;

  // Root of an increasing function of u = ln x. Solve on whichever tail is
  // the smaller probability so the target keeps full relative precision.
  const bool on_lower = p > 0.5;
  const double target = on_lower ? log_lower_target : std::log(p);

  // Large-x asymptotic Q(k, x) ~ x^(k-1) e^-x / (Γ(k) (1 + (1-k)/x)) gives a
  // better start when the closed form above lands at x >= 1.
  if (!on_lower && u > 0.0) {
    double x = -target - log_gamma_shape_;
    for (int i = 0; i < 3 && x > 1.0; ++i) {
      x = -target - log_gamma_shape_ + (shape_ - 1.0) * std::log(x) - std::log1p((1.0 - shape_) / x);
    }
    if (x > 1.0) u = std::log(x);
  }

  // Returns the residual, its slope, and the ratio of second to first
  // derivative. With L the log tail, d/du ln P = x f(x) / P = g, and
  // d/du ln g = k - x - g; the upper tail mirrors this with the sign of g flipped.
  struct Eval {
    double f;
    double slope;
    double curvature;
  };
  auto evaluate = [&](double at) -> Eval {
    const double x = std::exp(at);
    if (x == kInf) return {on_lower ? -target : kInf, 0.0, 0.0};
    const double log_prefactor = shape_ * at - x - log_gamma_shape_;
    double log_tail;
    if (x < shape_ + 1.0) {
      const double log_lower = std::min(0.0, log_prefactor + log_lower_series(shape_, x));
      log_tail = on_lower ? log_lower : log1m_exp(log_lower);
    } else {
      const double log_upper = std::min(0.0, log_prefactor + log_upper_fraction(shape_, x));
      log_tail = on_lower ? log1m_exp(log_upper) : log_upper;
    }
    const double g = std::exp(log_prefactor - log_tail);
    if (on_lower) return {log_tail - target, g, shape_ - x - g};
    return {target - log_tail, g, shape_ - x + g};
  };

  // Halley iteration from the guess. The bracket is only known on sides
  // already visited; an unbounded side is probed with growing steps.
  double lo = -kInf;
  double hi = kInf;
  double expand = 1.0;
  for (int iter = 0; iter < 400; ++iter) {
    const Eval e = evaluate(u);
    if (e.f == 0.0) return u;
    if (e.f < 0.0) {
      lo = u;
    } else {
      hi = u;
    }
    const double tol = std::max(1e-12, 8.0 * kEps * std::fabs(u));
    if (hi - lo <= tol) return 0.5 * (lo + hi);

    const double newton = -e.f / e.slope;
    const double denom = 1.0 + 0.5 * newton * e.curvature;
    const double step = denom > 0.5 ? newton / denom : newton;
    double next = u + step;
    if (!std::isfinite(next) || next <= lo || next >= hi) {
      if (lo == -kInf) {
        next = hi - expand;
        expand *= 2.0;
      } else if (hi == kInf) {
        next = lo + expand;
        expand *= 2.0;
      } else {
        next = 0.5 * (lo + hi);
      }
    } else if (std::fabs(step) <= tol || 0.5 * std::fabs(e.curvature) * step * step <= 0.01 * tol) {
      // The remaining error of a Newton-type step is about (f''/2f') step^2.
      return next;
    }
    u = next;
  }
  return u;
}

double gamma_cocdf_inverse(double shape, double p) { return GammaCoCdfInverse(shape)(p); }

double reg_gamma_upper_at_log(double shape, double log_x) {
  return std::exp(GammaCoCdfInverse(shape).tails(log_x).log_upper);
}

double reg_gamma_upper(double shape, double x) {
  check_shape(shape);
  if (!(x >= 0.0)) throw std::domain_error("reg_gamma_upper requires x >= 0, got " + std::to_string(x));
  if (x == 0.0) return 1.0;
  return reg_gamma_upper_at_log(shape, std::log(x));
}

}  // namespace rb2s
