#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "rb2s/testkit.hpp"

namespace rb2s::app {

/// One row of a test result: a single concentration value.
struct ResultRecord {
  std::string label;
  double a = 0.0;
  double rb_zero = 0.0;
  double strength = 0.0;
  std::optional<double> p_value;
  std::uint64_t seed = 0;
  std::size_t n1 = 0;
  std::size_t n2 = 0;
  std::vector<double> bin_rb;
  std::string verdict;
  std::optional<double> timing_ms;  // left out unless asked for; breaks byte-identical output

  bool operator==(const ResultRecord&) const = default;
};

/// Replication summary of one simulated case at one concentration value.
struct AggregateRecord {
  std::string label;
  double a = 0.0;
  std::size_t reps = 0;
  double median_rb_zero = 0.0;
  double median_strength = 0.0;
  std::optional<double> baseline_rejection_rate;  // share of p < 0.05
  std::uint64_t seed = 0;

  bool operator==(const AggregateRecord&) const = default;
};

std::vector<ResultRecord> to_records(const TestReport& report, const std::string& label, std::uint64_t seed);

void to_json(nlohmann::json& j, const ResultRecord& r);
void from_json(const nlohmann::json& j, ResultRecord& r);
void to_json(nlohmann::json& j, const AggregateRecord& r);
void from_json(const nlohmann::json& j, AggregateRecord& r);

/// "9.40(1)" style cell: ratio with two decimals, strength with up to three.
std::string rb_cell(double rb_zero, double strength);

}  // namespace rb2s::app
