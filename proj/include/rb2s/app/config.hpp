#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rb2s/testkit.hpp"

namespace rb2s::app {

/**
 * Applies a flat JSON object naming TestConfig fields onto cfg.
 *
 * Recognized keys: N, r1, r2, M, i0, a_values, n_perm, seed, workers,
 * unsafe_base. Unknown keys are an error, so typos do not silently fall back
 * to defaults. Returns the seed if the document sets one.
 */
std::optional<std::uint64_t> apply_config(const nlohmann::json& doc, TestConfig& cfg);

std::optional<std::uint64_t> apply_config_file(const std::filesystem::path& path, TestConfig& cfg);

/// "H" sets both bases, "H1|H2" sets them separately; either way unequal
/// bases become allowed.
void apply_unsafe_base(std::string_view text, TestConfig& cfg);

/// "1,10,20" -> {1, 10, 20}.
std::vector<double> parse_a_list(std::string_view text);

}  // namespace rb2s::app
