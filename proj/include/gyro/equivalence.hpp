#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gyro/action.hpp"
#include "gyro/coset_action.hpp"

namespace gyro {

/// A point map between two G-sets over the same carrier.
struct GMap {
  FiniteGSet source;
  FiniteGSet target;
  std::vector<Point> map;
};

/// phi(a . x) = a . phi(x) for all a, x; witness (a, x). Throws
/// CarrierMismatch if source and target have different carriers, and
/// PreconditionError if the map has the wrong length or leaves the target.
CheckResult checkGMap(const GMap& phi);
bool isGMap(const GMap& phi);
/// G-map and bijective.
bool isEquivalence(const GMap& phi);

GMap identityMap(const FiniteGSet& x);

struct FundamentalIsomorphism {
  Point base;
  /// G acting on G/stab(z).
  CosetAction cosetSpace;
  /// orb(z) as a G-set, points renumbered in increasing order.
  Subset orbit;
  FiniteGSet orbitSet;
  /// a + stab z  ->  a . z, into `orbitSet`.
  GMap phi;
};

/// Throws InvariantViolation if the map is not an equivalence.
FundamentalIsomorphism fundamentalIsomorphism(const FiniteGSet& x, Point z);

inline constexpr std::size_t kExhaustiveLimit = 6;

/// Brute force over all bijections X -> Y. Throws PreconditionError above
/// `kExhaustiveLimit` points.
std::optional<GMap> exhaustiveEquivalence(const FiniteGSet& x, const FiniteGSet& y);

struct EquivalenceDecision {
  bool equivalent = false;
  /// a with stab(x0) = conj(a, stab(y0)), x0 = y0 = point 0.
  std::optional<Elem> conjugator;
  std::optional<GMap> witness;
  /// Result of the brute-force search, when |X| <= kExhaustiveLimit.
  std::optional<bool> exhaustive;
  bool agreesWithExhaustive() const { return !exhaustive || *exhaustive == equivalent; }
};

/// Decides X = Y for transitive G-sets by stabilizer conjugacy. The witness is
/// the composite of the two fundamental isomorphisms through the common coset
/// space. Throws PreconditionError("transitive") or CarrierMismatch.
EquivalenceDecision areEquivalentTransitive(const FiniteGSet& x, const FiniteGSet& y);

struct Component {
  /// Points of the orbit in the parent G-set (sorted).
  Subset points;
  FiniteGSet gset;
};

/// Orbits as transitive G-sets, ordered by smallest point.
std::vector<Component> transitiveComponents(const FiniteGSet& x);

struct ComponentMatching {
  bool equivalent = false;
  std::vector<Component> left;
  std::vector<Component> right;
  /// match[i] = index of the right component paired with left component i.
  std::vector<std::optional<std::size_t>> match;
  std::vector<std::size_t> unmatchedLeft;
  std::vector<std::size_t> unmatchedRight;
  /// Global equivalence assembled from the per-component witnesses.
  std::optional<GMap> equivalence;
};

/// Maximum bipartite matching on the "equivalent components" relation. Each
/// left component prefers the smallest free right component before trying to
/// augment, so matchComponents(X, X) returns the identity matching.
ComponentMatching matchComponents(const FiniteGSet& x, const FiniteGSet& y);

}  // namespace gyro
