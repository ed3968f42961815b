#pragma once

// Text and JSON reports for one analysed file.

#include <string>
#include <vector>

#include "json.hpp"

#include "gtrs/analysis.hpp"

namespace gtrs {

struct ReportOptions {
  std::vector<Property> properties{all_properties.begin(), all_properties.end()};
  bool witness = false;
  bool timings = false;
  bool deterministic = false;  // drops timings
};

struct FileReport {
  std::string file;
  InputStats stats;
  std::vector<Verdict> verdicts;  // in options.properties order
};

/// Decides the requested properties. When all four are requested the
/// implication chain is checked (InternalError on violation).
FileReport run_report(Analysis& a, const std::string& file, const ReportOptions& options);

nlohmann::ordered_json to_json(Analysis& a, const FileReport& r, const ReportOptions& options);
std::string to_text(Analysis& a, const FileReport& r, const ReportOptions& options);

} // namespace gtrs
