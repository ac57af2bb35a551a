#pragma once

// Möbius and Einstein gyrogroups on the open unit ball of R^n.
//
// Arithmetic runs in binary128 (`__float128`). Evaluating the gyrator identity
// near the boundary composes maps whose Lipschitz constants grow like
// 1/(1 - |x|^2); in double precision the left loop property residual reaches
// 1e-4 for inputs of norm 0.99, far above the 1e-9 equality tolerance.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "gyro/carrier.hpp"
#include "gyro/diagnostics.hpp"

namespace gyro {

using Real = __float128;

inline constexpr double kDefaultEpsilon = 1e-9;
inline constexpr double kDefaultMargin = 1e-6;
inline constexpr double kDefaultProbeScale = 1e-3;
inline constexpr double kDefaultSampleNorm = 0.99;

enum class BallModel { Mobius, Einstein };

const char* to_string(BallModel m);
/// Accepts "mobius" / "einstein"; throws std::invalid_argument otherwise.
BallModel parseBallModel(const std::string& s);

struct BallElement {
  std::vector<Real> coords;

  BallElement() = default;
  explicit BallElement(std::vector<Real> c) : coords(std::move(c)) {}
  static BallElement fromDoubles(std::span<const double> c);
  static BallElement fromDoubles(std::initializer_list<double> c) { return fromDoubles(std::span(c.begin(), c.size())); }
  static BallElement zero(std::size_t dim) { return BallElement(std::vector<Real>(dim, Real(0))); }

  std::size_t dimension() const { return coords.size(); }
  std::vector<double> toDoubles() const;
  Real normSquared() const;
  double norm() const;
};

Real dot(const BallElement& u, const BallElement& v);

/// Möbius addition; arguments must satisfy |u|, |v| < 1 - margin.
BallElement mobiusAdd(const BallElement& u, const BallElement& v, double margin = kDefaultMargin);
/// Einstein addition; arguments must satisfy |u|, |v| < 1 - margin.
BallElement einsteinAdd(const BallElement& u, const BallElement& v, double margin = kDefaultMargin);
/// 1 / sqrt(1 - |u|^2).
Real lorentzGamma(const BallElement& u, double margin = kDefaultMargin);

/// The open unit ball under Möbius or Einstein addition.
///
/// `element()` enforces the boundary margin on user-supplied vectors. The
/// operation itself only requires its arguments to lie strictly inside the
/// ball, because composites such as a + (b + c) of admissible inputs can land
/// closer to the boundary than the margin.
class BallGyrogroup {
 public:
  using Element = BallElement;

  BallGyrogroup(std::size_t dimension, BallModel model, double epsilon = kDefaultEpsilon,
                double margin = kDefaultMargin);

  std::size_t dimension() const { return dim_; }
  BallModel model() const { return model_; }
  double epsilon() const { return eps_; }
  double margin() const { return margin_; }

  /// Checked constructor: dimension must match and |u| < 1 - margin.
  BallElement element(std::span<const double> coords) const;
  BallElement element(std::initializer_list<double> coords) const {
    return element(std::span(coords.begin(), coords.size()));
  }
  /// Throws InvalidElement if u is not admissible.
  void requireMember(const BallElement& u) const;

  BallElement add(const BallElement& u, const BallElement& v) const;
  BallElement zero() const { return BallElement::zero(dim_); }
  BallElement negate(const BallElement& u) const;
  double distance(const BallElement& u, const BallElement& v) const;
  bool equal(const BallElement& u, const BallElement& v) const { return distance(u, v) <= eps_; }

  /// Uniform sample from the ball of radius `maxNorm`.
  BallElement sample(std::mt19937_64& rng, double maxNorm = kDefaultSampleNorm) const;

 private:
  std::size_t dim_;
  BallModel model_;
  double eps_;
  double margin_;
};

struct GyrationMatrix {
  Eigen::MatrixXd matrix;
  /// max |gyr[a,b]c - M c| over the sampled probes c.
  double linearityResidual = 0.0;
  /// Frobenius norm of M^T M - I.
  double orthogonalityResidual = 0.0;
  std::size_t probes = 0;
};

/// Column j is gyr[a,b](s e_j) / s. Linearity is measured on `probes` points
/// of norm <= 0.99 drawn from `seed`.
GyrationMatrix ballGyrationMatrix(const BallGyrogroup& g, const BallElement& a, const BallElement& b,
                                  std::uint64_t seed, std::size_t probes = 16,
                                  double scale = kDefaultProbeScale);

struct BallReport {
  std::uint64_t seed = 0;
  std::size_t samples = 0;
  std::vector<ResidualCheck> axioms;
  CancellationReport cancellation;
  ResidualCheck orthogonality;
  ResidualCheck linearity;
  /// Every computed sum stayed strictly inside the ball.
  CheckResult closure;

  bool passed() const;
};

/// Sampled axiom, cancellation and gyration-structure checks.
BallReport analyzeBall(const BallGyrogroup& g, std::size_t samples, std::uint64_t seed,
                       AxiomTolerances tol = {});

}  // namespace gyro
