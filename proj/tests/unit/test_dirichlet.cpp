#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "rb2s/app/chickwts.hpp"
#include "rb2s/dirichlet.hpp"
#include "rb2s/random.hpp"

using Catch::Approx;
using rb2s::BaseMeasure;
using rb2s::DiscreteMeasure;
using rb2s::DistSpec;
using rb2s::DpPrior;
using rb2s::RandomStream;
using rb2s::StreamKey;

namespace {

DpPrior standard_prior(double a) { return DpPrior(a, BaseMeasure::analytic(DistSpec::normal(0.0, 1.0))); }

struct Moments {
  double mean;
  double variance;
};

Moments cdf_moments(const DpPrior& prior, double t, int draws, std::uint64_t seed) {
  std::vector<double> values;
  for (int j = 0; j < draws; ++j) {
    RandomStream stream(StreamKey(seed).child(static_cast<std::uint64_t>(j)));
    values.push_back(rb2s::sample_dp(prior, 1000, stream).cdf_at(t));
  }
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= draws;
  double var = 0.0;
  for (double v : values) var += (v - mean) * (v - mean);
  return {mean, var / (draws - 1)};
}

}  // namespace

TEST_CASE("posterior concentration and mixing weight", "[dirichlet]") {
  const std::vector<double> fifty(50, 0.3);
  const auto post = rb2s::posterior(standard_prior(1.0), fifty);
  CHECK(post.concentration() == 51.0);
  const auto& mix = std::get<rb2s::PosteriorMixture>(post.base().kind());
  CHECK(mix.prior_weight == Approx(1.0 / 51.0).epsilon(1e-15));
  CHECK(mix.data == fifty);

  const std::vector<double> three{1.0, 2.0, 3.0};
  CHECK(std::get<rb2s::PosteriorMixture>(rb2s::posterior(standard_prior(1.0), three).base().kind()).prior_weight ==
        Approx(0.25));

  const auto linseed = rb2s::app::chickwts::linseed;
  const auto lin_post = rb2s::posterior(standard_prior(2.0), linseed);
  CHECK(lin_post.concentration() == 14.0);
  CHECK(std::get<rb2s::PosteriorMixture>(lin_post.base().kind()).prior_weight == Approx(1.0 / 7.0));
}

TEST_CASE("posterior rejects bad input", "[dirichlet]") {
  CHECK_THROWS_AS(rb2s::posterior(standard_prior(1.0), std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(rb2s::posterior(standard_prior(1.0), std::vector<double>{1.0, NAN}), std::invalid_argument);
  const auto post = rb2s::posterior(standard_prior(1.0), std::vector<double>{1.0});
  CHECK_THROWS_AS(rb2s::posterior(post, std::vector<double>{1.0}), std::invalid_argument);
  CHECK_THROWS_AS(standard_prior(0.0), std::invalid_argument);
  CHECK_THROWS_AS(BaseMeasure::posterior_mixture(0.0, DistSpec::normal(0, 1), {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(BaseMeasure::posterior_mixture(0.5, DistSpec::normal(0, 1), {}), std::invalid_argument);
}

TEST_CASE("posterior base mixes analytic and empirical parts", "[dirichlet]") {
  // Data far from the analytic base, so each draw reveals its source.
  const auto base = BaseMeasure::posterior_mixture(0.25, DistSpec::normal(0.0, 1.0), {1000.0, 2000.0});
  RandomStream stream(StreamKey(3));
  int from_data = 0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double y = rb2s::sample_base(base, stream);
    if (y >= 1000.0) {
      ++from_data;
      CHECK((y == 1000.0 || y == 2000.0));
    }
  }
  CHECK(static_cast<double>(from_data) / n == Approx(0.75).margin(0.01));

  const auto all_prior = BaseMeasure::posterior_mixture(1.0, DistSpec::normal(0.0, 1.0), {1000.0});
  for (int i = 0; i < 1000; ++i) CHECK(rb2s::sample_base(all_prior, stream) < 1000.0);
}

TEST_CASE("series draw invariants", "[dirichlet]") {
  for (double a : {0.1, 1.0, 20.0, 200.0}) {
    RandomStream stream(StreamKey(5).child(static_cast<std::uint64_t>(a * 10)));
    const auto draw = rb2s::sample_series(standard_prior(a), 1000, stream);
    REQUIRE(draw.gammas.size() == 1001);
    REQUIRE(draw.atoms.size() == 1000);
    REQUIRE(draw.weights.size() == 1000);
    CHECK(std::is_sorted(draw.gammas.begin(), draw.gammas.end()));
    CHECK(std::is_sorted(draw.log_raw_weights.rbegin(), draw.log_raw_weights.rend()));
    double total = 0.0;
    for (double w : draw.weights) {
      CHECK(w >= 0.0);
      total += w;
    }
    CHECK(total == Approx(1.0).epsilon(1e-12));
    CHECK(draw.weights.front() == *std::max_element(draw.weights.begin(), draw.weights.end()));
  }
}

TEST_CASE("a one-term series is a point mass", "[dirichlet]") {
  RandomStream stream(StreamKey(6));
  const auto m = rb2s::sample_dp(standard_prior(1.0), 1, stream);
  REQUIRE(m.size() == 1);
  CHECK(m.weights()[0] == 1.0);
}

TEST_CASE("sampled measures are sorted and deterministic", "[dirichlet]") {
  RandomStream s1(StreamKey(8));
  RandomStream s2(StreamKey(8));
  const auto m1 = rb2s::sample_dp(standard_prior(1.0), 500, s1);
  const auto m2 = rb2s::sample_dp(standard_prior(1.0), 500, s2);
  CHECK(std::is_sorted(m1.atoms().begin(), m1.atoms().end()));
  CHECK(std::equal(m1.atoms().begin(), m1.atoms().end(), m2.atoms().begin(), m2.atoms().end()));
  CHECK(std::equal(m1.weights().begin(), m1.weights().end(), m2.weights().begin(), m2.weights().end()));
}

TEST_CASE("random CDF has the Dirichlet process moments", "[dirichlet]") {
  // F_P(0) ~ Beta(a/2, a/2): mean 1/2, variance 1 / (4 (a + 1)).
  const auto loose = cdf_moments(standard_prior(1.0), 0.0, 2000, 21);
  CHECK(loose.mean == Approx(0.5).margin(0.02));
  CHECK(loose.variance == Approx(0.125).margin(0.015));
  const auto tight = cdf_moments(standard_prior(20.0), 0.0, 2000, 22);
  CHECK(tight.mean == Approx(0.5).margin(0.02));
  CHECK(tight.variance == Approx(0.25 / 21.0).margin(0.002));
  CHECK(tight.variance < loose.variance);
}

TEST_CASE("posterior draws concentrate on the data", "[dirichlet]") {
  const std::vector<double> data(50, 2.0);
  const auto post = rb2s::posterior(standard_prior(1.0), data);
  // E F_P(0) = (a Phi(0) + n * 0) / (a + n).
  const auto at_zero = cdf_moments(post, 0.0, 500, 23);
  CHECK(at_zero.mean == Approx(0.5 / 51.0).margin(0.005));
  const auto at_two = cdf_moments(post, 2.0, 500, 24);
  CHECK(at_two.mean == Approx((0.9772498680518208 + 50.0) / 51.0).margin(0.005));
}

TEST_CASE("discrete measure cdf", "[dirichlet]") {
  const DiscreteMeasure m({3.0, 1.0, 2.0, 2.0}, {0.1, 0.2, 0.3, 0.4});
  CHECK(m.atoms()[0] == 1.0);
  CHECK(m.weights()[0] == 0.2);
  CHECK(rb2s::cdf_at(m, 0.5) == 0.0);
  CHECK(rb2s::cdf_at(m, 1.0) == Approx(0.2));
  CHECK(rb2s::cdf_at(m, 1.5) == Approx(0.2));
  CHECK(rb2s::cdf_at(m, 2.0) == Approx(0.9));
  CHECK(rb2s::cdf_at(m, 3.0) == Approx(1.0));
  CHECK(rb2s::cdf_at(m, 1e9) == Approx(1.0));

  const std::vector<double> data{5.0, 1.0, 3.0, 3.0};
  const auto e = DiscreteMeasure::empirical(data);
  CHECK(e.cdf_at(3.0) == Approx(0.75));
  CHECK(e.cdf_at(2.9) == Approx(0.25));
}

TEST_CASE("discrete measure validation", "[dirichlet]") {
  CHECK_THROWS_AS(DiscreteMeasure({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteMeasure({1.0}, {0.5, 0.5}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteMeasure({1.0, 2.0}, {0.5, 0.6}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteMeasure({1.0, 2.0}, {1.5, -0.5}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteMeasure({INFINITY}, {1.0}), std::invalid_argument);
  CHECK_THROWS_AS(DiscreteMeasure::empirical(std::vector<double>{}), std::invalid_argument);
  CHECK_NOTHROW(DiscreteMeasure({1.0, 2.0}, {0.5, 0.5 + 1e-12}));
}
