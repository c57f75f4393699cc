#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

namespace rb2s {

/// splitmix64 finalizer.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// FNV-1a, stable across platforms (unlike std::hash).
constexpr std::uint64_t hash_tag(std::string_view tag) noexcept {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (char c : tag) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001B3ULL;
  }
  return h;
}

/**
 * Names one independent random substream.
 *
 * Keys form a tree rooted at a master seed. A child key depends on the
 * parent key and the child label only, so the stream used for, say, prior
 * draw j of the second concentration value is the same no matter which
 * thread computes it or in what order.
 */
class StreamKey {
 public:
  constexpr explicit StreamKey(std::uint64_t master_seed) noexcept : state_(mix64(master_seed)) {}

  constexpr StreamKey child(std::uint64_t index) const noexcept {
    return StreamKey(mix64(state_ ^ mix64(index + 0xD1B54A32D192ED03ULL)), raw_tag{});
  }

  constexpr StreamKey child(std::string_view tag) const noexcept { return child(hash_tag(tag)); }

  constexpr std::uint64_t value() const noexcept { return state_; }

  constexpr bool operator==(const StreamKey&) const = default;

 private:
  struct raw_tag {};
  constexpr StreamKey(std::uint64_t state, raw_tag) noexcept : state_(state) {}

  std::uint64_t state_;
};

/// Owned random engine for one substream. Satisfies UniformRandomBitGenerator.
class RandomStream {
 public:
  using engine_type = std::mt19937_64;
  using result_type = engine_type::result_type;

  explicit RandomStream(StreamKey key) : engine_(key.value()) {}

  static constexpr result_type min() { return engine_type::min(); }
  static constexpr result_type max() { return engine_type::max(); }

  result_type operator()() { return engine_(); }

  /// Uniform on [0, 1).
  double uniform01() { return std::generate_canonical<double, std::numeric_limits<double>::digits>(engine_); }

 private:
  engine_type engine_;
};

}  // namespace rb2s
