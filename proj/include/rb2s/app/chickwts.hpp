#pragma once

#include <array>
#include <optional>
#include <span>
#include <string_view>

namespace rb2s::app::chickwts {

// Chick weights (grams) by feed supplement, from R's datasets::chickwts.
inline constexpr std::array<double, 14> soybean{158, 171, 193, 199, 230, 243, 248,
                                                248, 250, 267, 271, 316, 327, 329};
inline constexpr std::array<double, 12> linseed{141, 148, 169, 181, 203, 213, 229, 244, 257, 260, 271, 309};
inline constexpr std::array<double, 12> sunflower{226, 295, 297, 318, 320, 322, 334, 339, 340, 341, 392, 423};

inline std::optional<std::span<const double>> group(std::string_view name) {
  if (name == "soybean") return std::span<const double>(soybean);
  if (name == "linseed") return std::span<const double>(linseed);
  if (name == "sunflower") return std::span<const double>(sunflower);
  return std::nullopt;
}

}  // namespace rb2s::app::chickwts
