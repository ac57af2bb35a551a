#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gyro/carrier.hpp"
#include "gyro/coset_action.hpp"
#include "gyro/diagnostics.hpp"

namespace gyro {

using Json = nlohmann::ordered_json;

Json toJson(const CheckResult& c);
Json toJson(const ResidualCheck& c);
Json toJson(const CancellationReport& r);
Json toJson(const CriterionReport& r);

/// Output of one CLI command: a flat list of checks plus command-specific
/// results. Both renderings are deterministic.
struct Report {
  std::string command;
  Json checks = Json::array();
  Json result = Json::object();
  /// Human-readable lines printed before the checks in text mode.
  std::vector<std::string> lines;
  bool failed = false;

  void add(const CheckResult& c);
  void add(const ResidualCheck& c);
  void add(const CancellationReport& r);
  void add(const CriterionReport& r);

  Json json() const;
  void writeJson(std::ostream& out) const;
  void writeText(std::ostream& out) const;
};

}  // namespace gyro
