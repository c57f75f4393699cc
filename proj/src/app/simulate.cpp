#include "rb2s/app/simulate.hpp"

#include <algorithm>
#include <stdexcept>

namespace rb2s::app {

double median(std::vector<double> values) {
  if (values.empty()) throw std::invalid_argument("median of an empty list");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

std::vector<TestReport> simulate_replications(const CaseSpec& spec, std::size_t case_index, const TestConfig& cfg,
                                              std::size_t reps) {
  TestConfig run_cfg = cfg;
  if (spec.base_x || spec.base_y) {
    run_cfg.base_x = spec.base_x.value_or(cfg.base_x);
    run_cfg.base_y = spec.base_y.value_or(cfg.base_y);
    run_cfg.allow_unequal_bases = true;
  }

  const StreamKey root(cfg.master_seed);
  std::vector<TestReport> out;
  out.reserve(reps);
  for (std::size_t r = 0; r < reps; ++r) {
    RandomStream data_stream(root.child("data").child(spec.data_group).child(r));
    std::vector<double> x(spec.n1);
    std::vector<double> y(spec.n2);
    sample_n(spec.dist_x, data_stream, x);
    sample_n(spec.dist_y, data_stream, y);

    run_cfg.master_seed = root.child("test").child(case_index).child(r).value();
    TestReport report = sensitivity_sweep(x, y, run_cfg);
    for (auto& e : report.entries) {
      e.distances = {};
    }
    out.push_back(std::move(report));
  }
  return out;
}

std::vector<AggregateRecord> aggregate(const CaseSpec& spec, const std::vector<TestReport>& reports,
                                       std::uint64_t seed) {
  std::vector<AggregateRecord> out;
  if (reports.empty()) return out;
  for (std::size_t k = 0; k < reports.front().entries.size(); ++k) {
    std::vector<double> rb;
    std::vector<double> strength;
    std::size_t rejections = 0;
    std::size_t with_p = 0;
    for (const auto& rep : reports) {
      rb.push_back(rep.entries[k].summary.rb_zero);
      strength.push_back(rep.entries[k].summary.strength);
      if (rep.p_value) {
        ++with_p;
        if (*rep.p_value < 0.05) ++rejections;
      }
    }
    AggregateRecord a;
    a.label = spec.label;
    a.a = reports.front().entries[k].a;
    a.reps = reports.size();
    a.median_rb_zero = median(rb);
    a.median_strength = median(strength);
    if (with_p > 0) a.baseline_rejection_rate = static_cast<double>(rejections) / static_cast<double>(with_p);
    a.seed = seed;
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace rb2s::app
