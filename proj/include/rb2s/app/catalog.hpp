#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rb2s/distributions.hpp"

namespace rb2s::app {

/// One simulated two-sample scenario.
struct CaseSpec {
  std::string label;
  DistSpec dist_x;
  DistSpec dist_y;
  std::size_t n1 = 50;
  std::size_t n2 = 50;
  /// Prior base overrides, used only by the prior-data conflict study.
  std::optional<DistSpec> base_x;
  std::optional<DistSpec> base_y;
  /// Cases with the same data group reuse the same generated samples.
  std::size_t data_group = 0;
};

/// Nine distribution pairs at n = 50.
std::vector<CaseSpec> table1_catalog();
/// N(0,1) vs N(1,1) at n = 50 under four base measure pairs, one shared sample.
std::vector<CaseSpec> table2_catalog();
/// N(0,1) vs N(0,1) and N(0,1) vs N(1,1) over n in {5, 10, 15, 20, 30, 50, 100, 200}.
std::vector<CaseSpec> table3_catalog();

/// "table1" | "table2" | "table3". Throws std::invalid_argument otherwise.
std::vector<CaseSpec> catalog(std::string_view name);

/// Default concentration list for a catalog: {1, 10, 20} for table1, {1} otherwise.
std::vector<double> catalog_a_values(std::string_view name);

/// Parses "<DistSpec>|<DistSpec>|n1|n2".
CaseSpec parse_case(std::string_view text);

}  // namespace rb2s::app
