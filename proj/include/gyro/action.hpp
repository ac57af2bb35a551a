#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "gyro/diagnostics.hpp"
#include "gyro/finite_gyrogroup.hpp"

namespace gyro {

using Point = std::uint32_t;

/// Raw action table: entry (a, x) is a . x, for a in 0..order-1 and x in
/// 0..points-1.
struct ActionTable {
  std::size_t order = 0;
  std::size_t points = 0;
  std::vector<Point> entries;

  Point at(Elem a, Point x) const { return entries[static_cast<std::size_t>(a) * points + x]; }
  friend bool operator==(const ActionTable&, const ActionTable&) = default;
};

/// Reads the `action <n> <k>` text format. Throws ParseError.
ActionTable parseActionTable(std::string_view text);
ActionTable loadActionTable(const std::string& path);
std::string serializeActionTable(const ActionTable& t);

class FiniteGSet;

namespace detail {
FiniteGSet assembleGSet(FiniteGyrogroup g, ActionTable t);
}

/// A validated action of a finite gyrogroup on {0, ..., k-1}.
class FiniteGSet {
 public:
  const FiniteGyrogroup& carrier() const { return carrier_; }
  std::size_t size() const { return table_.points; }
  Point act(Elem a, Point x) const { return table_.at(a, x); }
  /// sigma_a : x -> a . x
  std::span<const Point> permutation(Elem a) const {
    return {table_.entries.data() + static_cast<std::size_t>(a) * table_.points, table_.points};
  }
  const ActionTable& table() const { return table_; }

 private:
  FiniteGSet(FiniteGyrogroup g, ActionTable t) : carrier_(std::move(g)), table_(std::move(t)) {}
  FiniteGyrogroup carrier_;
  ActionTable table_;
  friend FiniteGSet detail::assembleGSet(FiniteGyrogroup, ActionTable);
};

struct ActionValidation {
  /// point-range, identity-acts-trivially, action-compatibility
  std::vector<CheckResult> checks;
  std::optional<FiniteGSet> gset;
  bool valid() const { return gset.has_value(); }
};

/// Checks 0 . x = x and a . (b . x) = (a + b) . x exhaustively. Throws
/// PreconditionError if the table dimensions do not match |G| x k.
ActionValidation validateAction(const FiniteGyrogroup& g, ActionTable t);
/// Throws PreconditionError naming the first failed check.
FiniteGSet requireAction(const FiniteGyrogroup& g, ActionTable t);

/// a . x = a + x on G itself (valid iff all gyrations are trivial).
ActionTable selfActionTable(const FiniteGyrogroup& g);
/// a . x = x on k points.
ActionTable trivialActionTable(const FiniteGyrogroup& g, std::size_t points);

// ---------------------------------------------------------------------------
// Permutation representation

struct Representation {
  std::vector<std::vector<Point>> perms;
  /// {a : sigma_a = id}
  Subset kernel;
  /// sigma_{a+b} = sigma_a o sigma_b for all pairs.
  CheckResult homomorphism;
};

Representation buildRepresentation(const FiniteGSet& x);

/// a . x = perms[a](x). Throws PreconditionError("homomorphism", ...) with a
/// witness if perms is not a homomorphism G -> Sym(X).
FiniteGSet actionFromHomomorphism(const FiniteGyrogroup& g, const std::vector<std::vector<Point>>& perms);

// ---------------------------------------------------------------------------
// Orbits and stabilizers

struct OrbitDecomposition {
  /// Orbits ordered by smallest point.
  std::vector<Subset> orbits;
  std::vector<std::size_t> orbitOf;
  /// stab(x) for every point x.
  std::vector<Subset> stabilizers;
  /// Fix(X)
  Subset fixedPoints;
  /// fix(a) for every element a.
  std::vector<Subset> fixedBy;

  bool stabilizersAreSubgyrogroups = true;
  bool stabilizersAreLSubgyrogroups = true;
  /// gyr[a,b](stab x) = stab x for all a, b, x.
  bool stabilizersGyrationInvariant = true;
  /// ker = intersection of all stabilizers.
  bool kernelIsIntersection = true;
};

OrbitDecomposition orbitsAndStabilizers(const FiniteGSet& x);

struct OrbitStabilizerRow {
  Point point;
  std::size_t orbitSize;
  std::size_t stabilizerSize;
  bool holds;  // |G| = |orb x| |stab x|
};

struct OrbitStabilizerReport {
  std::vector<OrbitStabilizerRow> rows;
  /// |G| = |orb x| |stab x| for every x; witness (x).
  CheckResult equation;
  /// a . x = b . x  <=>  a + stab x = b + stab x; witness (x, a, b).
  CheckResult cosetBijection;
  bool passed() const { return equation.passed() && cosetBijection.passed(); }
};

OrbitStabilizerReport checkOrbitStabilizer(const FiniteGSet& x);

struct OrbitDecompositionReport {
  std::size_t points = 0;
  std::size_t fixedPoints = 0;
  /// (representative, [G : stab rep]) for each non-singleton orbit.
  std::vector<std::pair<Point, std::size_t>> terms;
  bool holds = false;
};

OrbitDecompositionReport orbitDecompositionEquation(const FiniteGSet& x);

struct BurnsideReport {
  boost::rational<long long> count;
  /// |fix(a)| for each a.
  std::vector<std::size_t> fixCounts;
  /// |stab(x)| for each x (the other side of the double count).
  std::vector<std::size_t> stabilizerCounts;
  std::size_t orbitCount = 0;
  bool integral = false;
  bool matchesOrbitCount = false;
};

/// (1/|G|) sum_a |fix(a)|, exact.
BurnsideReport burnsideCount(const FiniteGSet& x);

struct ActionClassification {
  bool faithful = false;
  bool transitive = false;
  bool free = false;
  bool semiregular = false;
  bool sharplyTransitive = false;

  /// The implications between the flags that the theory guarantees:
  /// sharply transitive = transitive and free = transitive and semiregular,
  /// free => semiregular => faithful, transitive => (free <=> semiregular).
  bool consistent() const;
};

/// Computes each flag from its definition; sharp transitivity by counting
/// solutions of a . x = y.
ActionClassification classify(const FiniteGSet& x);

struct TranslateStabilizer {
  Subset direct;           // stab(a . x)
  Subset viaConjugation;   // {(a + c) [-] a : c in stab x}
  bool agree() const { return direct == viaConjugation; }
};

TranslateStabilizer stabilizerOfTranslate(const FiniteGSet& x, Elem a, Point p);

/// Stabilizer of a single point.
Subset stabilizer(const FiniteGSet& x, Point p);

/// Conjugate of a subset by a, normalized.
Subset conjugateSubset(const FiniteGyrogroup& g, Elem a, const Subset& s);

struct QuotientAction {
  Subset kernel;
  CosetPartition kernelCosets;
  FiniteGyrogroup quotient;
  /// Action of G/ker on X; quotient element i is the coset kernelCosets.cosets[i].
  FiniteGSet action;
};

/// Faithful action of G/ker on X by (a + ker) . x = a . x. Well-definedness of
/// the quotient operation and the action is verified exhaustively; a failure
/// raises InvariantViolation.
QuotientAction faithfulQuotientAction(const FiniteGSet& x);

/// Restriction to an invariant subset Y (points renumbered in increasing
/// order). Throws PreconditionError("invariant-subset", ...) with witness
/// (a, y) if a . y leaves Y.
FiniteGSet restrictToInvariant(const FiniteGSet& x, const Subset& y);

}  // namespace gyro
