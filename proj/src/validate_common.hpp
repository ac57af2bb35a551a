#pragma once

#include <optional>
#include <vector>

#include "gyro/cayley_table.hpp"
#include "gyro/diagnostics.hpp"

namespace gyro::detail {

inline void absorb(CheckResult& into, const CheckResult& from) {
  if (from.status == Status::Fail) into.status = Status::Fail;
  into.violations += from.violations;
  for (const auto& w : from.witnesses) {
    if (into.witnesses.size() >= CheckResult::kMaxWitnesses) break;
    into.witnesses.push_back(w);
  }
}

/// For each a: exactly one b with b + a = 0, and that b also satisfies
/// a + b = 0. Returns the left-inverse map when it is well defined (unique
/// left inverses), even if two-sidedness fails, so later checks can still run.
inline std::optional<std::vector<Elem>> checkInverses(const CayleyTable& t, CheckResult& check) {
  const auto n = static_cast<Elem>(t.order());
  std::vector<Elem> inv(n);
  bool defined = true;
  for (Elem a = 0; a < n; ++a) {
    std::vector<Elem> left;
    for (Elem b = 0; b < n; ++b)
      if (t.at(b, a) == 0) left.push_back(b);
    if (left.empty()) {
      check.fail({a});
      defined = false;
    } else if (left.size() > 1) {
      check.fail({a, left[0], left[1]});
      defined = false;
    } else {
      inv[a] = left[0];
      if (t.at(a, left[0]) != 0) check.fail({a, left[0]});
    }
  }
  if (!defined) return std::nullopt;
  return inv;
}

}  // namespace gyro::detail
