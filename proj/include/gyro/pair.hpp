#pragma once

// Pairs (u, r) of a 2-ball vector and a rotation index in Z/m, with
//   (a, alpha) + (b, beta) = (a + b, alpha + beta mod m).
// This stands in for translations composed with identity-fixing permutations
// of the ball, restricted to the finite rotation group of order m.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "gyro/ball.hpp"
#include "gyro/coset_action.hpp"

namespace gyro {

struct PairElement {
  BallElement u;
  std::uint32_t r = 0;
};

class PairGyrogroup {
 public:
  using Element = PairElement;

  explicit PairGyrogroup(BallModel model = BallModel::Mobius, std::uint32_t m = 6, double epsilon = kDefaultEpsilon,
                         double margin = kDefaultMargin);

  const BallGyrogroup& ball() const { return ball_; }
  std::uint32_t rotations() const { return m_; }

  /// Checked constructor; throws InvalidElement for a bad vector or r >= m.
  PairElement element(std::initializer_list<double> u, std::uint32_t r) const;

  PairElement add(const PairElement& x, const PairElement& y) const;
  PairElement zero() const { return {ball_.zero(), 0}; }
  PairElement negate(const PairElement& x) const;
  /// Ball distance, plus 1 when the rotations differ.
  double distance(const PairElement& x, const PairElement& y) const;
  bool equal(const PairElement& x, const PairElement& y) const { return x.r == y.r && ball_.equal(x.u, y.u); }

  PairElement sample(std::mt19937_64& rng, double maxNorm = kDefaultSampleNorm) const;

 private:
  BallGyrogroup ball_;
  std::uint32_t m_;
};

/// (gyr_ball[a,b]c, gamma) for x = (a, alpha), y = (b, beta), z = (c, gamma).
PairElement pairGyration(const PairGyrogroup& g, const PairElement& x, const PairElement& y, const PairElement& z);

/// Index of the left coset x + B^ where B^ = B x {0}: the rotation component.
inline std::uint32_t hatCosetIndex(const PairElement& x) { return x.r; }

/// (a, alpha) . k = alpha + k mod m.
inline std::uint32_t hatCosetAction(const PairGyrogroup& g, const PairElement& x, std::uint32_t k) {
  return (x.r + k) % g.rotations();
}

/// The coset space of B^. Construction runs the sampled coset criterion and
/// throws CriterionError if it fails.
class HatCosetSpace {
 public:
  HatCosetSpace(const PairGyrogroup& g, std::size_t samples, std::uint64_t seed);

  std::uint32_t size() const { return g_.rotations(); }
  std::uint32_t act(const PairElement& x, std::uint32_t k) const { return hatCosetAction(g_, x, k); }
  const CriterionReport& criterion() const { return criterion_; }

 private:
  PairGyrogroup g_;
  CriterionReport criterion_;
};

struct PairReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::uint32_t m = 0;
  std::vector<ResidualCheck> axioms;
  CancellationReport cancellation;
  /// pairGyration vs the gyrator identity evaluated through the pair operation.
  ResidualCheck gyrationFormula;
  CriterionReport criterion;
  /// coset-count, transitive, action-axioms, coset-rule, stabilizer-in-hat,
  /// not-semiregular, conjugate-stabilizer, nontrivial-gyration
  std::vector<CheckResult> cosetChecks;
  std::size_t cosetsObserved = 0;

  bool passed() const;
};

PairReport analyzePairs(const PairGyrogroup& g, std::size_t samples, std::uint64_t seed, AxiomTolerances tol = {});

}  // namespace gyro
