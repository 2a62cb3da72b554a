#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace descpoly {

inline constexpr const char* kVersion = "0.1.0";

struct Violation {
  std::string set;
  std::string detail;
};

struct CheckResult {
  std::string name;
  std::string universe;
  bool passed = true;
  bool informational = false;  // conjectures and census: never gate the exit code
  std::vector<Violation> violations;
  std::vector<std::string> notes;
};

struct Report {
  std::string config;
  std::vector<CheckResult> checks;

  bool all_required_passed() const;
  nlohmann::json to_json() const;
};

}  // namespace descpoly
