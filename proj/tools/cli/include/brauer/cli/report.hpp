#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "brauer/cli/request.hpp"

namespace brauer::cli {

using Json = nlohmann::ordered_json;

struct ReportFactor {
  std::string name;
  std::string value;  // decimal, exact
  std::string provenance;

  friend bool operator==(const ReportFactor&, const ReportFactor&) = default;
};

/// One run of the tool. Field names of the structured form are documented in
/// docs/structured-output.md.
struct Report {
  std::string command;
  Json inputs = Json::object();
  Json result = Json::object();
  std::optional<std::vector<ReportFactor>> factors;
  std::vector<std::string> provenance;
  /// Human-readable lines, each ending in its provenance note.
  std::vector<std::string> summary;
  int exit_status = 0;
};

bool operator==(const Report& a, const Report& b);

Json to_json(const Report& r);
/// Error when a required field is missing or has the wrong type.
Report report_from_json(const Json& j);

std::string to_structured(const Report& r);
Report parse_structured(std::string_view text);

std::string render_text(const Report& r);

}  // namespace brauer::cli
