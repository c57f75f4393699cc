#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "rb2s/random.hpp"
#include "rb2s/relbelief.hpp"

using Catch::Approx;
using rb2s::DistanceSamples;
using rb2s::QuantileGrid;
using rb2s::RandomStream;
using rb2s::StreamKey;

namespace {

std::vector<double> uniform_sample(std::size_t n, std::uint64_t seed, double scale = 1.0) {
  RandomStream stream{StreamKey(seed)};
  std::vector<double> out(n);
  for (double& v : out) v = scale * stream.uniform01();
  return out;
}

double sum(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

}  // namespace

TEST_CASE("quantile grid examples", "[relbelief]") {
  const std::vector<double> four{4.0, 2.0, 1.0, 3.0};
  CHECK(rb2s::quantile_grid(four, 2).edges == std::vector<double>{0.0, 2.0, 4.0});
  CHECK(rb2s::quantile_grid(four, 4).edges == std::vector<double>{0.0, 1.0, 2.0, 3.0, 4.0});

  const std::vector<double> constant(10, 0.25);
  const auto flat = rb2s::quantile_grid(constant, 5);
  CHECK(flat.edges == std::vector<double>{0.0, 0.25, 0.25, 0.25, 0.25, 0.25});

  const auto distinct = rb2s::quantile_grid(uniform_sample(2000, 1), 20);
  REQUIRE(distinct.bins() == 20);
  for (std::size_t i = 1; i < distinct.edges.size(); ++i) CHECK(distinct.edges[i] > distinct.edges[i - 1]);
  // Rank ceil(i r / M) = 100 i for r = 2000, M = 20.
  auto sorted = uniform_sample(2000, 1);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 1; i < 20; ++i) CHECK(distinct.edges[i] == sorted[100 * i - 1]);

  CHECK_THROWS_AS(rb2s::quantile_grid(four, 1), std::invalid_argument);
  CHECK_THROWS_AS(rb2s::quantile_grid(std::vector<double>{}, 4), std::invalid_argument);
}

TEST_CASE("posterior equal to prior gives ratios near one", "[relbelief]") {
  const auto prior = uniform_sample(2000, 2);
  const auto grid = rb2s::quantile_grid(prior, 20);
  for (double rb : rb2s::rb_bins(grid, prior, 1)) CHECK(rb == Approx(1.0).margin(20.0 * 2.0 / 2000.0));
  CHECK(rb2s::rb_zero(grid, prior, 1) == Approx(1.0).margin(0.02));
  const double s = rb2s::strength(grid, prior, 1, rb2s::rb_zero(grid, prior, 1));
  CHECK(s > 0.0);
  CHECK(s <= 1.0);
  CHECK(s >= 0.05 - 1e-12);
}

TEST_CASE("posterior below the zero edge", "[relbelief]") {
  const auto prior = uniform_sample(2000, 3);
  const auto grid = rb2s::quantile_grid(prior, 20);
  const std::vector<double> posterior(500, grid.edges[1] / 2.0);
  for (double rb : rb2s::rb_bins(grid, posterior, 1)) CHECK(rb == 0.0);
  const double rb0 = rb2s::rb_zero(grid, posterior, 1);
  CHECK(rb0 == 20.0);
  CHECK(rb2s::strength(grid, posterior, 1, rb0) == 1.0);
}

TEST_CASE("posterior above the top edges", "[relbelief]") {
  const auto prior = uniform_sample(2000, 4, 0.1);
  const auto grid = rb2s::quantile_grid(prior, 20);
  const std::vector<double> posterior(500, 0.5);
  const auto bins = rb2s::rb_bins(grid, posterior, 1);
  REQUIRE(bins.size() == 19);
  CHECK(bins.back() == 20.0);
  for (std::size_t k = 0; k + 1 < bins.size(); ++k) CHECK(bins[k] == 0.0);
  const double rb0 = rb2s::rb_zero(grid, posterior, 1);
  CHECK(rb0 == 0.0);
  // Only the last bin holds mass, and its ratio M exceeds rb0 = 0.
  CHECK(rb2s::strength(grid, posterior, 1, rb0) == 0.0);
}

TEST_CASE("strength counts bins whose ratio does not exceed rb0", "[relbelief]") {
  // Prior 1..10, M = 5: edges 0, 2, 4, 6, 8, 10.
  std::vector<double> prior(10);
  std::iota(prior.begin(), prior.end(), 1.0);
  const auto grid = rb2s::quantile_grid(prior, 5);
  REQUIRE(grid.edges == std::vector<double>{0.0, 2.0, 4.0, 6.0, 8.0, 10.0});
  // 10 posterior draws: 2 in [0,2], 1 in (2,4], 4 in (4,6], 2 in (6,8], 1 above 8.
  const std::vector<double> posterior{0.5, 2.0, 3.0, 5.0, 5.0, 5.5, 6.0, 7.0, 8.0, 9.5};
  CHECK(rb2s::rb_zero(grid, posterior, 1) == Approx(1.0));
  const auto bins = rb2s::rb_bins(grid, posterior, 1);
  REQUIRE(bins.size() == 4);
  CHECK(bins[0] == Approx(0.5));
  CHECK(bins[1] == Approx(2.0));
  CHECK(bins[2] == Approx(1.0));
  CHECK(bins[3] == Approx(0.5));
  // Zero region 0.2, plus bins with ratio <= 1: 0.1 + 0.2 + 0.1.
  CHECK(rb2s::strength(grid, posterior, 1, 1.0) == Approx(0.6));
  CHECK(rb2s::strength(grid, posterior, 1, 0.5) == Approx(0.4));
  CHECK(rb2s::strength(grid, posterior, 1, 0.0) == Approx(0.2));
  // With i0 = 2 the zero region is [0, 4].
  CHECK(rb2s::rb_zero(grid, posterior, 2) == Approx(1.5));
  CHECK(rb2s::rb_bins(grid, posterior, 2).size() == 3);
}

TEST_CASE("repeated prior values leave empty bins", "[relbelief]") {
  // Half the prior draws are exactly 0, so the first several edges coincide.
  std::vector<double> prior(100, 0.0);
  const auto upper = uniform_sample(100, 5);
  prior.insert(prior.end(), upper.begin(), upper.end());
  const auto grid = rb2s::quantile_grid(prior, 10);
  const std::vector<double> posterior{0.0, 0.0, 0.9, 0.99};
  const auto bins = rb2s::rb_bins(grid, posterior, 1);
  for (std::size_t k = 0; k < 4; ++k) CHECK(bins[k] == 0.0);
  CHECK(rb2s::rb_zero(grid, posterior, 1) == Approx(5.0));
  CHECK((rb2s::rb_zero(grid, posterior, 1) + sum(bins)) / 10.0 == Approx(1.0).epsilon(1e-12));
  CHECK(rb2s::strength(grid, posterior, 1, rb2s::rb_zero(grid, posterior, 1)) == Approx(1.0));
}

TEST_CASE("mass conservation and ranges", "[relbelief]") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    RandomStream stream(StreamKey(seed).child("shape"));
    const double squash = 0.1 + 3.0 * stream.uniform01();
    auto posterior = uniform_sample(300 + seed * 7, 100 + seed);
    for (double& v : posterior) v = std::pow(v, squash);
    const DistanceSamples samples{uniform_sample(500 + seed * 11, 200 + seed), posterior};
    for (std::size_t m : {2, 5, 20}) {
      for (std::size_t i0 = 1; i0 < m; i0 += 3) {
        const auto s = rb2s::summarize(samples, m, i0);
        CHECK((s.rb_zero + sum(s.bin_rb)) / static_cast<double>(m) == Approx(1.0).margin(1e-9));
        CHECK(s.rb_zero >= 0.0);
        CHECK(s.rb_zero <= static_cast<double>(m));
        CHECK(s.strength >= 0.0);
        CHECK(s.strength <= 1.0);
      }
    }
  }
}

TEST_CASE("summary is invariant to rescaling the distances", "[relbelief]") {
  const DistanceSamples samples{uniform_sample(1000, 6), uniform_sample(800, 7, 0.6)};
  DistanceSamples scaled = samples;
  for (double& v : scaled.prior) v *= 0.25;
  for (double& v : scaled.posterior) v *= 0.25;
  const auto a = rb2s::summarize(samples, 20, 1);
  const auto b = rb2s::summarize(scaled, 20, 1);
  CHECK(a.rb_zero == b.rb_zero);
  CHECK(a.strength == b.strength);
  CHECK(a.bin_rb == b.bin_rb);
}

TEST_CASE("summarize examples and validation", "[relbelief]") {
  const auto prior = uniform_sample(2000, 8);
  const auto far = uniform_sample(2000, 9, 0.01);
  std::vector<double> high(far);
  for (double& v : high) v = 1.0 - v;
  const auto up = rb2s::summarize({prior, high}, 20, 1);
  CHECK(up.rb_zero == 0.0);
  CHECK(up.strength == 0.0);

  const auto down = rb2s::summarize({prior, std::vector<double>(100, 0.0)}, 20, 1);
  CHECK(down.rb_zero == 20.0);
  CHECK(down.strength == 1.0);
  CHECK(down.prior_draws == 2000);
  CHECK(down.posterior_draws == 100);

  CHECK_THROWS_AS(rb2s::summarize({prior, {}}, 20, 1), std::invalid_argument);
  CHECK_THROWS_AS(rb2s::summarize({prior, {1.5}}, 20, 1), std::invalid_argument);
  CHECK_THROWS_AS(rb2s::summarize({prior, {0.5}}, 20, 0), std::invalid_argument);
  CHECK_THROWS_AS(rb2s::summarize({prior, {0.5}}, 20, 20), std::invalid_argument);
}
