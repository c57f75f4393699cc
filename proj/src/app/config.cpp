#include "rb2s/app/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <stdexcept>
#include <string>

namespace rb2s::app {
namespace {

std::size_t positive_size(const nlohmann::json& v, const std::string& key) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw std::invalid_argument("config key '" + key + "' must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

std::optional<std::uint64_t> apply_config(const nlohmann::json& doc, TestConfig& cfg) {
  if (!doc.is_object()) throw std::invalid_argument("config must be a JSON object");
  std::optional<std::uint64_t> seed;
  for (const auto& [key, value] : doc.items()) {
    if (key == "N") {
      cfg.n_atoms = positive_size(value, key);
    } else if (key == "r1") {
      cfg.prior_draws = positive_size(value, key);
    } else if (key == "r2") {
      cfg.posterior_draws = positive_size(value, key);
    } else if (key == "M") {
      cfg.bins = positive_size(value, key);
    } else if (key == "i0") {
      cfg.i0 = positive_size(value, key);
    } else if (key == "n_perm") {
      cfg.n_perm = positive_size(value, key);
    } else if (key == "workers") {
      cfg.workers = static_cast<unsigned>(positive_size(value, key));
    } else if (key == "seed") {
      if (!value.is_number_unsigned()) throw std::invalid_argument("config key 'seed' must be a nonnegative integer");
      seed = value.get<std::uint64_t>();
    } else if (key == "a_values") {
      if (!value.is_array() || !std::all_of(value.begin(), value.end(), [](const auto& v) { return v.is_number(); })) {
        throw std::invalid_argument("config key 'a_values' must be an array of numbers");
      }
      cfg.a_values = value.get<std::vector<double>>();
    } else if (key == "unsafe_base") {
      if (!value.is_string()) throw std::invalid_argument("config key 'unsafe_base' must be a string");
      apply_unsafe_base(value.get<std::string>(), cfg);
    } else {
      throw std::invalid_argument("unknown config key '" + key + "'");
    }
  }
  return seed;
}

std::optional<std::uint64_t> apply_config_file(const std::filesystem::path& path, TestConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument(path.string() + ": cannot open config");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  return apply_config(doc, cfg);
}

void apply_unsafe_base(std::string_view text, TestConfig& cfg) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) {
    cfg.base_x = parse_dist_spec(text);
    cfg.base_y = cfg.base_x;
  } else {
    cfg.base_x = parse_dist_spec(text.substr(0, bar));
    cfg.base_y = parse_dist_spec(text.substr(bar + 1));
  }
  cfg.allow_unequal_bases = true;
}

std::vector<double> parse_a_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view token = text.substr(start, end - start);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size() || !(v > 0.0)) {
      throw std::invalid_argument("invalid concentration list '" + std::string(text) + "'");
    }
    out.push_back(v);
    start = end + 1;
  }
  return out;
}

}  // namespace rb2s::app
