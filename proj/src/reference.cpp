// Serial reference implementations of the parallel kernels. Written for
// obviousness, not speed; the test suite compares them against the OpenMP
// versions.

#include "gyro/coset_action.hpp"
#include "gyro/finite_gyrogroup.hpp"
#include "validate_common.hpp"

namespace gyro {

ValidationResult validateGyrogroupSerial(const CayleyTable& t) {
  const auto n = static_cast<Elem>(t.order());
  ValidationResult result;
  result.checks.resize(kAxiomCheckCount);
  for (std::size_t i = 0; i < kAxiomCheckCount; ++i) result.checks[i].name = to_string(static_cast<AxiomCheck>(i));

  for (Elem b = 0; b < n; ++b)
    if (t.at(0, b) != b) result.checks[0].fail({b});

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = b + 1; c < n; ++c)
        if (t.at(a, b) == t.at(a, c)) result.checks[1].fail({a, b, c});

  const auto inverse = detail::checkInverses(t, result.checks[2]);
  if (!inverse) {
    for (std::size_t i = 3; i < kAxiomCheckCount; ++i)
      result.checks[i] = CheckResult::skipped(result.checks[i].name, "inverse map is not well defined");
    return result;
  }
  const auto& inv = *inverse;
  auto gyr = [&](Elem a, Elem b, Elem c) { return t.at(inv[t.at(a, b)], t.at(a, t.at(b, c))); };

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        for (Elem d = c + 1; d < n; ++d)
          if (gyr(a, b, c) == gyr(a, b, d)) result.checks[3].fail({a, b, c, d});

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem u = 0; u < n; ++u)
        for (Elem v = 0; v < n; ++v)
          if (gyr(a, b, t.at(u, v)) != t.at(gyr(a, b, u), gyr(a, b, v))) result.checks[4].fail({a, b, u, v});

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (t.at(a, t.at(b, c)) != t.at(t.at(a, b), gyr(a, b, c))) result.checks[5].fail({a, b, c});

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (gyr(t.at(a, b), b, c) != gyr(a, b, c)) result.checks[6].fail({a, b, c});

  if (allPassed(result.checks)) {
    std::vector<Elem> table;
    table.reserve(static_cast<std::size_t>(n) * n * n);
    for (Elem a = 0; a < n; ++a)
      for (Elem b = 0; b < n; ++b)
        for (Elem c = 0; c < n; ++c) table.push_back(gyr(a, b, c));
    result.gyrogroup = detail::assembleGyrogroup(t, inv, std::move(table));
  }
  return result;
}

CriterionReport cosetCriterionSerial(const FiniteGyrogroup& g, const Subset& h) {
  const auto n = static_cast<Elem>(g.order());
  CriterionReport r = detail::emptyCriterionReport(h);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem x : h)
        if (!contains(h, g.gyr(a, b, x))) r.gyrationInvariance.fail({a, b, x});
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem x = 0; x < n; ++x)
        if (!contains(h, g.add(g.negate(x), g.gyr(a, b, x)))) r.cosetDisplacement.fail({a, b, x});
  return r;
}

}  // namespace gyro
