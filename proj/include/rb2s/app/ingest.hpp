#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <vector>

namespace rb2s::app {

class IngestError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One finite real per line, or a one-column CSV whose first line may be a
/// header. Blank lines are skipped. Throws IngestError naming the source and
/// line on the first bad token, and on empty input.
std::vector<double> parse_sample(std::istream& in, const std::string& source);

std::vector<double> ingest(const std::filesystem::path& path);

/// Like ingest(), but "chickwts:<group>" resolves to the embedded data.
std::vector<double> load_sample(const std::string& spec);

}  // namespace rb2s::app
