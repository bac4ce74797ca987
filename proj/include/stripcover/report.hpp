#pragma once

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "stripcover/rational.hpp"

namespace stripcover {

/// Command output. Exact values are authoritative; decimals are display only.
struct Report {
  struct Input {
    std::string path;
    std::string sha256;
  };
  struct Value {
    std::string label;
    Rational value;
  };
  struct Check {
    std::string name;
    bool passed;
    std::string detail;
  };

  std::string command;
  std::vector<Input> inputs;
  std::vector<Value> results;
  std::vector<Check> checks;
  std::vector<std::string> lines;  // free-form detail (assignments, tables)

  void add(std::string label, Rational value) { results.push_back({std::move(label), std::move(value)}); }
  void check(std::string name, bool passed, std::string detail = {}) {
    checks.push_back({std::move(name), passed, std::move(detail)});
  }

  bool ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["inputs"] = nlohmann::json::array();
    for (const auto& in : inputs) j["inputs"].push_back({{"path", in.path}, {"sha256", in.sha256}});
    j["results"] = nlohmann::json::array();
    for (const auto& r : results) {
      j["results"].push_back({{"label", r.label}, {"exact", r.value.str()}, {"decimal", r.value.decimal(12)}});
    }
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json entry{{"name", c.name}, {"passed", c.passed}};
      if (!c.detail.empty()) entry["detail"] = c.detail;
      j["checks"].push_back(entry);
    }
    if (!lines.empty()) j["details"] = lines;
    j["ok"] = ok();
    return j;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "command " << command << "\n";
    for (const auto& in : inputs) os << "input " << in.path << " sha256 " << in.sha256 << "\n";
    for (const auto& r : results) {
      os << r.label << " " << r.value.str() << "  (~" << r.value.decimal(12) << ")\n";
    }
    for (const auto& l : lines) os << l << "\n";
    for (const auto& c : checks) {
      os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
      if (!c.detail.empty()) os << "  (" << c.detail << ")";
      os << "\n";
    }
    return os.str();
  }
};

}  // namespace stripcover
