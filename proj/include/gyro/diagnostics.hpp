#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "gyro/error.hpp"

namespace gyro {

enum class Status { Pass, Fail, Skipped };

const char* to_string(Status s);

/// Outcome of one exhaustive or sampled check. Witnesses are kept in
/// lexicographic order and capped at `kMaxWitnesses`; `violations` counts all.
struct CheckResult {
  static constexpr std::size_t kMaxWitnesses = 16;

  std::string name;
  Status status = Status::Pass;
  std::size_t violations = 0;
  std::vector<Witness> witnesses;
  std::string note;

  bool passed() const { return status == Status::Pass; }

  void fail(Witness w) {
    status = Status::Fail;
    ++violations;
    if (witnesses.size() < kMaxWitnesses) witnesses.push_back(std::move(w));
  }

  static CheckResult skipped(std::string name, std::string why) {
    CheckResult r;
    r.name = std::move(name);
    r.status = Status::Skipped;
    r.note = std::move(why);
    return r;
  }
};

/// Residual-based check for carriers compared with a tolerance.
struct ResidualCheck {
  std::string name;
  double maxResidual = 0.0;
  double tolerance = 0.0;
  std::size_t samples = 0;

  bool passed() const { return maxResidual <= tolerance; }
  void observe(double r) {
    // NaN counts as a failure.
    if (!(r <= maxResidual)) maxResidual = (r != r) ? std::numeric_limits<double>::infinity() : r;
    ++samples;
  }
};

inline bool allPassed(const std::vector<CheckResult>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed(); });
}

inline bool allPassed(const std::vector<ResidualCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const ResidualCheck& c) { return c.passed(); });
}

}  // namespace gyro
