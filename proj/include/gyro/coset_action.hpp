#pragma once

// Left gyroaddition on a coset space: a . (x + H) = (a + x) + H.
//
// The action exists exactly when
//   (1) gyr[a,b](H) is contained in H for all a, b, and
//   (2) -x + gyr[a,b]x lies in H for all a, b, x.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gyro/action.hpp"
#include "gyro/carrier.hpp"
#include "gyro/diagnostics.hpp"
#include "gyro/finite_gyrogroup.hpp"

namespace gyro {

struct CriterionReport {
  Subset subgroup;  // empty for sampled carriers
  /// Condition (1); witness (a, b, h).
  CheckResult gyrationInvariance;
  /// Condition (2); witness (a, b, x).
  CheckResult cosetDisplacement;
  std::string mode = "exhaustive";
  std::size_t samples = 0;
  std::uint64_t seed = 0;

  bool passed() const { return gyrationInvariance.passed() && cosetDisplacement.passed(); }
};

namespace detail {
inline CriterionReport emptyCriterionReport(const Subset& h) {
  CriterionReport r;
  r.subgroup = h;
  r.gyrationInvariance.name = "gyration-invariance";
  r.cosetDisplacement.name = "coset-displacement";
  return r;
}
}  // namespace detail

/// a . x = a + x is an action of G on itself iff every gyration is trivial.
/// On failure the check carries one witness (a, b, x) with gyr[a,b]x != x.
CheckResult selfActionCheck(const FiniteGyrogroup& g);
inline bool selfActionPossible(const FiniteGyrogroup& g) { return selfActionCheck(g).passed(); }

/// Exhaustive check of both conditions; (a, b) blocks run under OpenMP.
CriterionReport cosetCriterion(const FiniteGyrogroup& g, const Subset& h);
/// Serial reference for `cosetCriterion`.
CriterionReport cosetCriterionSerial(const FiniteGyrogroup& g, const Subset& h);

/// Sampled variant for carriers with infinitely many elements. For sample i,
/// (a, b, x) = triples[i] and h = members[i % members.size()]; `inH` decides
/// membership. Witnesses are sample indices.
template <GyrogroupCarrier C>
CriterionReport cosetCriterionSampled(const C& g, std::span<const Triple<ElementOf<C>>> triples,
                                      std::span<const ElementOf<C>> members,
                                      const std::function<bool(const ElementOf<C>&)>& inH, std::uint64_t seed) {
  CriterionReport r = detail::emptyCriterionReport({});
  r.mode = "sampled";
  r.samples = triples.size();
  r.seed = seed;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    const auto& [a, b, x] = triples[i];
    const auto idx = static_cast<std::uint32_t>(i);
    if (!members.empty() && !inH(gyration(g, a, b, members[i % members.size()])))
      r.gyrationInvariance.fail({idx});
    if (!inH(g.add(g.negate(x), gyration(g, a, b, x)))) r.cosetDisplacement.fail({idx});
  }
  return r;
}

/// Table of a . (x + H) = (a + x) + H on the cosets of H, numbered as in
/// `leftCosets`. No criterion check: returns nullopt only when the cosets do
/// not partition G or the rule depends on the representative.
std::optional<ActionTable> cosetActionTable(const FiniteGyrogroup& g, const Subset& h);

struct CosetAction {
  CosetPartition cosets;
  FiniteGSet gset;
  CriterionReport criterion;
  /// well-defined, action-axioms, transitive, stabilizer-is-conjugate,
  /// not-semiregular (skipped for H = {0}), index-formula
  std::vector<CheckResult> postconditions;
};

/// Builds the coset action. Throws PreconditionError if h is not a
/// subgyrogroup, CriterionError with a witness if the criterion fails or the
/// cosets overlap, and InvariantViolation if a postcondition fails.
CosetAction buildCosetAction(const FiniteGyrogroup& g, const Subset& h);

/// G acting on G/H for a subgyrogroup H of a G-set's carrier that contains the
/// kernel and is invariant under every gyration. Throws PreconditionError whose
/// hypothesis is "subgyrogroup", "contains-kernel" (witness: kernel element)
/// or "gyration-invariant" (witness: a, b, h).
CosetAction inducedActionOverSubgyrogroup(const FiniteGSet& x, const Subset& h);

}  // namespace gyro
