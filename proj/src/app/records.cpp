#include "rb2s/app/records.hpp"

#include <fmt/format.h>

namespace rb2s::app {
namespace {

template <class T>
void put_optional(nlohmann::json& j, const char* key, const std::optional<T>& v) {
  j[key] = v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
void get_optional(const nlohmann::json& j, const char* key, std::optional<T>& v) {
  if (j.contains(key) && !j.at(key).is_null()) {
    v = j.at(key).get<T>();
  } else {
    v.reset();
  }
}

}  // namespace

std::vector<ResultRecord> to_records(const TestReport& report, const std::string& label, std::uint64_t seed) {
  std::vector<ResultRecord> out;
  for (const auto& e : report.entries) {
    ResultRecord r;
    r.label = label;
    r.a = e.a;
    r.rb_zero = e.summary.rb_zero;
    r.strength = e.summary.strength;
    r.p_value = report.p_value;
    r.seed = seed;
    r.n1 = report.n1;
    r.n2 = report.n2;
    r.bin_rb = e.summary.bin_rb;
    r.verdict = to_string(report.verdict);
    out.push_back(std::move(r));
  }
  return out;
}

void to_json(nlohmann::json& j, const ResultRecord& r) {
  j = nlohmann::json{{"label", r.label},     {"a", r.a},   {"rb_zero", r.rb_zero}, {"strength", r.strength},
                     {"seed", r.seed},       {"n1", r.n1}, {"n2", r.n2},           {"bin_rb", r.bin_rb},
                     {"verdict", r.verdict}};
  put_optional(j, "p_value", r.p_value);
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
}

void from_json(const nlohmann::json& j, ResultRecord& r) {
  j.at("label").get_to(r.label);
  j.at("a").get_to(r.a);
  j.at("rb_zero").get_to(r.rb_zero);
  j.at("strength").get_to(r.strength);
  j.at("seed").get_to(r.seed);
  j.at("n1").get_to(r.n1);
  j.at("n2").get_to(r.n2);
  j.at("bin_rb").get_to(r.bin_rb);
  j.at("verdict").get_to(r.verdict);
  get_optional(j, "p_value", r.p_value);
  get_optional(j, "timing_ms", r.timing_ms);
}

void to_json(nlohmann::json& j, const AggregateRecord& r) {
  j = nlohmann::json{{"label", r.label},
                     {"a", r.a},
                     {"reps", r.reps},
                     {"median_rb_zero", r.median_rb_zero},
                     {"median_strength", r.median_strength},
                     {"seed", r.seed}};
  put_optional(j, "baseline_rejection_rate", r.baseline_rejection_rate);
}

void from_json(const nlohmann::json& j, AggregateRecord& r) {
  j.at("label").get_to(r.label);
  j.at("a").get_to(r.a);
  j.at("reps").get_to(r.reps);
  j.at("median_rb_zero").get_to(r.median_rb_zero);
  j.at("median_strength").get_to(r.median_strength);
  j.at("seed").get_to(r.seed);
  get_optional(j, "baseline_rejection_rate", r.baseline_rejection_rate);
}

std::string rb_cell(double rb_zero, double strength) {
  std::string s = fmt::format("{:.3f}", strength);
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return fmt::format("{:.2f}({})", rb_zero, s);
}

}  // namespace rb2s::app
