#include "brauer/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace brauer::cli {

bool operator==(const Report& a, const Report& b) {
  return a.command == b.command && a.inputs == b.inputs && a.result == b.result && a.factors == b.factors &&
         a.provenance == b.provenance && a.summary == b.summary && a.exit_status == b.exit_status;
}

Json to_json(const Report& r) {
  Json j = Json::object();
  j["command"] = r.command;
  j["inputs"] = r.inputs;
  j["result"] = r.result;
  if (r.factors) {
    Json fs = Json::array();
    for (const auto& f : *r.factors) fs.push_back({{"name", f.name}, {"value", f.value}, {"provenance", f.provenance}});
    j["factors"] = std::move(fs);
  }
  j["provenance"] = r.provenance;
  j["summary"] = r.summary;
  j["exit_status"] = r.exit_status;
  return j;
}

namespace {

const Json& field(const Json& j, const char* name, Json::value_t type) {
  if (!j.is_object() || !j.contains(name)) throw Error(std::string("structured report lacks '") + name + "'");
  const Json& v = j.at(name);
  const bool ok = v.type() == type || (type == Json::value_t::number_integer && v.is_number_integer());
  if (!ok) throw Error(std::string("structured report field '") + name + "' has the wrong type");
  return v;
}

std::vector<std::string> strings(const Json& j, const char* name) {
  std::vector<std::string> out;
  for (const auto& s : field(j, name, Json::value_t::array)) {
    if (!s.is_string()) throw Error(std::string("'") + name + "' must hold strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

}  // namespace

Report report_from_json(const Json& j) {
  Report r;
  r.command = field(j, "command", Json::value_t::string).get<std::string>();
  r.inputs = field(j, "inputs", Json::value_t::object);
  r.result = field(j, "result", Json::value_t::object);
  if (j.contains("factors")) {
    std::vector<ReportFactor> fs;
    for (const auto& f : field(j, "factors", Json::value_t::array))
      fs.push_back({field(f, "name", Json::value_t::string).get<std::string>(),
                    field(f, "value", Json::value_t::string).get<std::string>(),
                    field(f, "provenance", Json::value_t::string).get<std::string>()});
    r.factors = std::move(fs);
  }
  r.provenance = strings(j, "provenance");
  r.summary = strings(j, "summary");
  r.exit_status = field(j, "exit_status", Json::value_t::number_integer).get<int>();
  return r;
}

std::string to_structured(const Report& r) { return to_json(r).dump(2) + "\n"; }

Report parse_structured(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(std::string("structured report is not valid JSON: ") + e.what());
  }
  return report_from_json(j);
}

std::string render_text(const Report& r) {
  std::ostringstream os;
  os << r.command << "\n";
  for (const auto& [key, value] : r.inputs.items())
    os << "  " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  os << "\n";
  for (const auto& line : r.summary) os << line << "\n";
  if (r.factors) {
    std::size_t width = 0;
    for (const auto& f : *r.factors) width = std::max(width, f.name.size());
    os << "\nfactors:\n";
    for (const auto& f : *r.factors)
      os << "  " << f.name << std::string(width - f.name.size(), ' ') << "  " << f.value << "  [" << f.provenance
         << "]\n";
  }
  if (!r.provenance.empty()) {
    os << "\nprovenance:\n";
    for (const auto& p : r.provenance) os << "  - " << p << "\n";
  }
  return os.str();
}

}  // namespace brauer::cli
