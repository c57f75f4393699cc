#include "rb2s/distributions.hpp"

#include <algorithm>
#include <boost/math/distributions/students_t.hpp>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace rb2s {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

bool finite(double v) { return std::isfinite(v); }

double normal_cdf(double z) { return 0.5 * std::erfc(-z * M_SQRT1_2); }

double student_t_draw(double df, double z, RandomStream& stream) {
  std::gamma_distribution<double> chi_square(0.5 * df, 2.0);
  return z / std::sqrt(chi_square(stream) / df);
}

}  // namespace

DistSpec DistSpec::normal(double mean, double sd) {
  require(finite(mean) && finite(sd) && sd > 0.0, "normal requires finite mean and sd > 0");
  return DistSpec(Normal{mean, sd});
}

DistSpec DistSpec::exponential(double mean) {
  require(finite(mean) && mean > 0.0, "exp requires mean > 0");
  return DistSpec(Exponential{mean});
}

DistSpec DistSpec::student_t(double df) {
  require(finite(df) && df > 0.0, "t requires df > 0");
  return DistSpec(StudentT{df});
}

DistSpec DistSpec::uniform(double lo, double hi) {
  require(finite(lo) && finite(hi) && lo < hi, "unif requires lo < hi");
  return DistSpec(Uniform{lo, hi});
}

DistSpec DistSpec::lognormal(double mu, double sigma) {
  require(finite(mu) && finite(sigma) && sigma > 0.0, "lognormal requires sigma > 0");
  return DistSpec(LogNormal{mu, sigma});
}

DistSpec DistSpec::mixture(std::vector<MixtureComponent> components) {
  require(!components.empty(), "mix requires at least one component");
  double total = 0.0;
  for (const auto& c : components) {
    require(finite(c.weight) && c.weight > 0.0, "mix weights must be positive");
    total += c.weight;
  }
  require(std::fabs(total - 1.0) <= 1e-12, "mix weights must sum to 1");
  return DistSpec(Mixture{std::move(components)});
}

double sample(const DistSpec& spec, RandomStream& stream) {
  return std::visit(
      overloaded{
          [&](const Normal& d) { return std::normal_distribution<double>(d.mean, d.sd)(stream); },
          [&](const Exponential& d) { return std::exponential_distribution<double>(1.0 / d.mean)(stream); },
          [&](const StudentT& d) {
            return student_t_draw(d.df, std::normal_distribution<double>()(stream), stream);
          },
          [&](const Uniform& d) { return std::uniform_real_distribution<double>(d.lo, d.hi)(stream); },
          [&](const LogNormal& d) { return std::exp(std::normal_distribution<double>(d.mu, d.sigma)(stream)); },
          [&](const Mixture& d) {
            double u = stream.uniform01();
            for (const auto& c : d.components) {
              if (u < c.weight) return sample(c.dist, stream);
              u -= c.weight;
            }
            return sample(d.components.back().dist, stream);
          },
      },
      spec.kind());
}

void sample_n(const DistSpec& spec, RandomStream& stream, std::span<double> out) {
  std::visit(overloaded{
                 [&](const Normal& d) {
                   std::normal_distribution<double> dist(d.mean, d.sd);
                   for (double& v : out) v = dist(stream);
                 },
                 [&](const LogNormal& d) {
                   std::normal_distribution<double> dist(d.mu, d.sigma);
                   for (double& v : out) v = std::exp(dist(stream));
                 },
                 [&](const StudentT& d) {
                   std::normal_distribution<double> z;
                   std::gamma_distribution<double> chi_square(0.5 * d.df, 2.0);
                   for (double& v : out) v = z(stream) / std::sqrt(chi_square(stream) / d.df);
                 },
                 [&](const auto&) {
                   for (double& v : out) v = sample(spec, stream);
                 },
             },
             spec.kind());
}

double cdf(const DistSpec& spec, double x) {
  if (std::isnan(x)) throw std::domain_error("cdf evaluated at NaN");
  return std::visit(
      overloaded{
          [&](const Normal& d) { return normal_cdf((x - d.mean) / d.sd); },
          [&](const Exponential& d) { return x <= 0.0 ? 0.0 : -std::expm1(-x / d.mean); },
          [&](const StudentT& d) {
            if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
            return boost::math::cdf(boost::math::students_t_distribution<double>(d.df), x);
          },
          [&](const Uniform& d) {
            if (x <= d.lo) return 0.0;
            if (x >= d.hi) return 1.0;
            return (x - d.lo) / (d.hi - d.lo);
          },
          [&](const LogNormal& d) { return x <= 0.0 ? 0.0 : normal_cdf((std::log(x) - d.mu) / d.sigma); },
          [&](const Mixture& d) {
            double total = 0.0;
            for (const auto& c : d.components) total += c.weight * cdf(c.dist, x);
            return std::clamp(total, 0.0, 1.0);
          },
      },
      spec.kind());
}

}  // namespace rb2s
