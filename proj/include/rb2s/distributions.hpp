#pragma once

#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rb2s/random.hpp"

namespace rb2s {

class DistSpec;
struct MixtureComponent;

struct Normal {
  double mean;
  double sd;
  bool operator==(const Normal&) const = default;
};

/// Parameterized by the mean, not the rate.
struct Exponential {
  double mean;
  bool operator==(const Exponential&) const = default;
};

/// Real-valued degrees of freedom; df <= 1 (no mean) is allowed.
struct StudentT {
  double df;
  bool operator==(const StudentT&) const = default;
};

struct Uniform {
  double lo;
  double hi;
  bool operator==(const Uniform&) const = default;
};

struct LogNormal {
  double mu;
  double sigma;
  bool operator==(const LogNormal&) const = default;
};

struct Mixture {
  std::vector<MixtureComponent> components;
  bool operator==(const Mixture&) const;
};

/**
 * Closed description of a univariate sampling distribution.
 *
 * Only constructible through the validating factories, so every DistSpec in
 * the program satisfies its parameter constraints.
 */
class DistSpec {
 public:
  using Kind = std::variant<Normal, Exponential, StudentT, Uniform, LogNormal, Mixture>;

  static DistSpec normal(double mean, double sd);
  static DistSpec exponential(double mean);
  static DistSpec student_t(double df);
  static DistSpec uniform(double lo, double hi);
  static DistSpec lognormal(double mu, double sigma);
  /// Weights must be positive and sum to 1 within 1e-12.
  static DistSpec mixture(std::vector<MixtureComponent> components);

  const Kind& kind() const noexcept { return kind_; }

  bool operator==(const DistSpec&) const = default;

 private:
  explicit DistSpec(Kind kind) : kind_(std::move(kind)) {}

  Kind kind_;
};

struct MixtureComponent {
  double weight;
  DistSpec dist;
  bool operator==(const MixtureComponent&) const = default;
};

inline bool Mixture::operator==(const Mixture& other) const { return components == other.components; }

/// One draw.
double sample(const DistSpec& spec, RandomStream& stream);

/// Fills out with i.i.d. draws; cheaper than repeated sample() for the
/// single-family variants.
void sample_n(const DistSpec& spec, RandomStream& stream, std::span<double> out);

double cdf(const DistSpec& spec, double x);

/// Canonical text form, e.g. "normal(0,1)", "exp(1)", "t(0.5)", "unif(10,20)",
/// "lognormal(0,1)", "mix(0.5*normal(-2,1)+0.5*normal(2,1))".
std::string to_string(const DistSpec& spec);

/// Parses the canonical text form. Throws std::invalid_argument.
DistSpec parse_dist_spec(std::string_view text);

}  // namespace rb2s
