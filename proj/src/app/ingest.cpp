#include "rb2s/app/ingest.hpp"

#include <charconv>
#include <cmath>
#include <fstream>

#include "rb2s/app/chickwts.hpp"

namespace rb2s::app {
namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n\v\f";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

bool parse_real(std::string_view token, double& value) {
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  return ec == std::errc() && end == token.data() + token.size();
}

}  // namespace

std::vector<double> parse_sample(std::istream& in, const std::string& source) {
  std::vector<double> out;
  std::string line;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view token = trim(line);
    if (token.empty()) continue;
    // A trailing delimiter is tolerated; a second column is not.
    if (token.back() == ',') token = trim(token.substr(0, token.size() - 1));
    const bool first_content = !seen_content;
    seen_content = true;

    double value = 0.0;
    if (token.find(',') == std::string_view::npos && parse_real(token, value)) {
      if (!std::isfinite(value)) {
        throw IngestError(source + ":" + std::to_string(line_no) + ": non-finite value '" + std::string(token) + "'");
      }
      out.push_back(value);
      continue;
    }
    const bool header = first_content && line_no == 1 && token.find(',') == std::string_view::npos;
    if (header) continue;
    throw IngestError(source + ":" + std::to_string(line_no) + ": not a number: '" + std::string(token) + "'");
  }
  if (in.bad()) throw IngestError(source + ": read error");
  if (out.empty()) throw IngestError(source + ": no numeric values");
  return out;
}

std::vector<double> ingest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IngestError(path.string() + ": cannot open file");
  return parse_sample(in, path.string());
}

std::vector<double> load_sample(const std::string& spec) {
  constexpr std::string_view prefix = "chickwts:";
  if (spec.rfind(prefix, 0) == 0) {
    const auto data = chickwts::group(std::string_view(spec).substr(prefix.size()));
    if (!data) throw IngestError("unknown chickwts group in '" + spec + "' (soybean, linseed, sunflower)");
    return {data->begin(), data->end()};
  }
  return ingest(spec);
}

}  // namespace rb2s::app
