#include "rb2s/app/catalog.hpp"

#include <charconv>
#include <stdexcept>

namespace rb2s::app {
namespace {

CaseSpec make_case(DistSpec x, DistSpec y, std::size_t n, std::size_t group) {
  CaseSpec c{"x~" + to_string(x) + " y~" + to_string(y) + " n=" + std::to_string(n), std::move(x), std::move(y), n, n,
             std::nullopt, std::nullopt, group};
  return c;
}

std::size_t parse_size(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || end != s.data() + s.size() || value == 0) {
    throw std::invalid_argument("invalid sample size '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

std::vector<CaseSpec> table1_catalog() {
  const auto n01 = DistSpec::normal(0, 1);
  const auto bimodal = DistSpec::mixture({{0.5, DistSpec::normal(-2, 1)}, {0.5, DistSpec::normal(2, 1)}});
  std::vector<CaseSpec> out{
      make_case(n01, n01, 50, 0),
      make_case(n01, DistSpec::normal(1, 1), 50, 1),
      make_case(n01, DistSpec::normal(0, 2), 50, 2),
      make_case(n01, bimodal, 50, 3),
      make_case(n01, DistSpec::student_t(3), 50, 4),
      make_case(n01, DistSpec::student_t(0.5), 50, 5),
      make_case(DistSpec::lognormal(0, 1), DistSpec::lognormal(1, 1), 50, 6),
      make_case(DistSpec::exponential(1), DistSpec::exponential(2), 50, 7),
      make_case(DistSpec::exponential(1), DistSpec::exponential(1), 50, 8),
  };
  for (std::size_t i = 0; i < out.size(); ++i) out[i].label = "case" + std::to_string(i + 1) + " " + out[i].label;
  return out;
}

std::vector<CaseSpec> table2_catalog() {
  const auto n01 = DistSpec::normal(0, 1);
  const auto n11 = DistSpec::normal(1, 1);
  const auto u1020 = DistSpec::uniform(10, 20);
  const std::pair<DistSpec, DistSpec> bases[] = {
      {n01, n01},
      {DistSpec::normal(-5, 1), DistSpec::normal(5, 1)},
      {u1020, n01},
      {u1020, u1020},
  };
  std::vector<CaseSpec> out;
  for (const auto& [hx, hy] : bases) {
    CaseSpec c = make_case(n01, n11, 50, 0);
    c.label += " H1=" + to_string(hx) + " H2=" + to_string(hy);
    c.base_x = hx;
    c.base_y = hy;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<CaseSpec> table3_catalog() {
  const auto n01 = DistSpec::normal(0, 1);
  const auto n11 = DistSpec::normal(1, 1);
  std::vector<CaseSpec> out;
  std::size_t group = 0;
  for (std::size_t n : {5, 10, 15, 20, 30, 50, 100, 200}) {
    out.push_back(make_case(n01, n01, n, group++));
    out.push_back(make_case(n01, n11, n, group++));
  }
  return out;
}

std::vector<CaseSpec> catalog(std::string_view name) {
  if (name == "table1") return table1_catalog();
  if (name == "table2") return table2_catalog();
  if (name == "table3") return table3_catalog();
  throw std::invalid_argument("unknown catalog '" + std::string(name) + "' (table1, table2, table3)");
}

std::vector<double> catalog_a_values(std::string_view name) {
  if (name == "table1") return {1.0, 10.0, 20.0};
  return {1.0};
}

CaseSpec parse_case(std::string_view text) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t pos; (pos = text.find('|', start)) != std::string_view::npos; start = pos + 1) {
    parts.push_back(text.substr(start, pos - start));
  }
  parts.push_back(text.substr(start));
  if (parts.size() != 4) throw std::invalid_argument("case must look like '<dist>|<dist>|n1|n2'");
  CaseSpec c{std::string(text), parse_dist_spec(parts[0]), parse_dist_spec(parts[1]), parse_size(parts[2]),
             parse_size(parts[3]), std::nullopt, std::nullopt, 0};
  return c;
}

}  // namespace rb2s::app
