#include "descpoly/report.hpp"

namespace descpoly {

bool Report::all_required_passed() const {
  for (const auto& c : checks)
    if (!c.informational && !c.passed) return false;
  return true;
}

nlohmann::json Report::to_json() const {
  nlohmann::json out;
  out["version"] = kVersion;
  out["config"] = config;
  out["checks"] = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json jc;
    jc["name"] = c.name;
    jc["universe"] = c.universe;
    jc["passed"] = c.passed;
    jc["informational"] = c.informational;
    jc["violations"] = nlohmann::json::array();
    for (const auto& v : c.violations) jc["violations"].push_back({{"set", v.set}, {"detail", v.detail}});
    if (!c.notes.empty()) jc["notes"] = c.notes;
    out["checks"].push_back(std::move(jc));
  }
  return out;
}

}  // namespace descpoly
