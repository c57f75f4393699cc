#pragma once

#include <cstdint>
#include <vector>

#include "rb2s/app/catalog.hpp"
#include "rb2s/app/records.hpp"
#include "rb2s/testkit.hpp"

namespace rb2s::app {

/// Draws fresh samples for each replication and runs the sweep on them.
/// Replication r of data group g draws its data from key (seed, "data", g, r);
/// the test itself is seeded from (seed, "test", case_index, r).
std::vector<TestReport> simulate_replications(const CaseSpec& spec, std::size_t case_index, const TestConfig& cfg,
                                              std::size_t reps);

/// Medians over replications, one record per concentration value.
std::vector<AggregateRecord> aggregate(const CaseSpec& spec, const std::vector<TestReport>& reports,
                                       std::uint64_t seed);

double median(std::vector<double> values);

}  // namespace rb2s::app
