#include "gyro/ball.hpp"

#include <quadmath.h>

#include <cmath>
#include <exception>
#include <stdexcept>

#include "gyro/error.hpp"
#include "gyro/sampling.hpp"

namespace gyro {

namespace {

constexpr double kMinDenominator = 1e-15;

void requireSameDimension(const BallElement& u, const BallElement& v) {
  if (u.dimension() != v.dimension()) throw InvalidElement("ball: dimension mismatch");
}

void requireInside(const BallElement& u, double margin) {
  const Real bound = Real(1) - Real(margin);
  if (!(u.normSquared() < bound * bound))
    throw InvalidElement("ball: element with norm " + std::to_string(u.norm()) + " violates |u| < 1 - " +
                         std::to_string(margin));
}

BallElement checkedResult(BallElement w) {
  if (!(w.normSquared() < Real(1))) throw NumericalError("ball: sum left the open unit ball");
  return w;
}

BallElement mobius(const BallElement& u, const BallElement& v) {
  const Real uv = dot(u, v);
  const Real uu = u.normSquared();
  const Real vv = v.normSquared();
  const Real den = 1 + 2 * uv + uu * vv;
  if (fabsq(den) < kMinDenominator) throw NumericalError("ball: Möbius denominator vanished");
  const Real cu = (1 + 2 * uv + vv) / den;
  const Real cv = (1 - uu) / den;
  BallElement w;
  w.coords.resize(u.dimension());
  for (std::size_t i = 0; i < w.coords.size(); ++i) w.coords[i] = cu * u.coords[i] + cv * v.coords[i];
  return checkedResult(std::move(w));
}

BallElement einstein(const BallElement& u, const BallElement& v) {
  const Real uv = dot(u, v);
  const Real gamma = 1 / sqrtq(1 - u.normSquared());
  const Real den = 1 + uv;
  if (fabsq(den) < kMinDenominator) throw NumericalError("ball: Einstein denominator vanished");
  const Real cu = (1 + (gamma / (1 + gamma)) * uv) / den;
  const Real cv = (1 / gamma) / den;
  BallElement w;
  w.coords.resize(u.dimension());
  for (std::size_t i = 0; i < w.coords.size(); ++i) w.coords[i] = cu * u.coords[i] + cv * v.coords[i];
  return checkedResult(std::move(w));
}

}  // namespace

const char* to_string(BallModel m) { return m == BallModel::Mobius ? "mobius" : "einstein"; }

BallModel parseBallModel(const std::string& s) {
  if (s == "mobius") return BallModel::Mobius;
  if (s == "einstein") return BallModel::Einstein;
  throw std::invalid_argument("unknown ball model '" + s + "' (expected mobius|einstein)");
}

BallElement BallElement::fromDoubles(std::span<const double> c) {
  BallElement e;
  e.coords.reserve(c.size());
  for (double x : c) e.coords.push_back(Real(x));
  return e;
}

std::vector<double> BallElement::toDoubles() const {
  std::vector<double> out;
  out.reserve(coords.size());
  for (const Real& x : coords) out.push_back(static_cast<double>(x));
  return out;
}

Real BallElement::normSquared() const { return dot(*this, *this); }
double BallElement::norm() const { return static_cast<double>(sqrtq(normSquared())); }

Real dot(const BallElement& u, const BallElement& v) {
  Real s = 0;
  for (std::size_t i = 0; i < u.coords.size(); ++i) s += u.coords[i] * v.coords[i];
  return s;
}

BallElement mobiusAdd(const BallElement& u, const BallElement& v, double margin) {
  requireSameDimension(u, v);
  requireInside(u, margin);
  requireInside(v, margin);
  return mobius(u, v);
}

BallElement einsteinAdd(const BallElement& u, const BallElement& v, double margin) {
  requireSameDimension(u, v);
  requireInside(u, margin);
  requireInside(v, margin);
  return einstein(u, v);
}

Real lorentzGamma(const BallElement& u, double margin) {
  requireInside(u, margin);
  return 1 / sqrtq(1 - u.normSquared());
}

BallGyrogroup::BallGyrogroup(std::size_t dimension, BallModel model, double epsilon, double margin)
    : dim_(dimension), model_(model), eps_(epsilon), margin_(margin) {
  if (dim_ == 0) throw std::invalid_argument("ball: dimension must be at least 1");
  if (!(eps_ > 0)) throw std::invalid_argument("ball: epsilon must be positive");
  if (!(margin_ > 0 && margin_ < 1)) throw std::invalid_argument("ball: margin must lie in (0, 1)");
  // Negation is the inverse for both models; confirm on a few probes.
  for (double r : {0.5, 0.9, 0.99}) {
    BallElement u = zero();
    for (std::size_t i = 0; i < dim_; ++i) u.coords[i] = Real(r / std::sqrt(static_cast<double>(dim_)));
    if (!equal(add(negate(u), u), zero()) || !equal(add(u, negate(u)), zero()))
      throw InvariantViolation("ball: negation is not a two-sided inverse");
  }
}

BallElement BallGyrogroup::element(std::span<const double> coords) const {
  auto e = BallElement::fromDoubles(coords);
  requireMember(e);
  return e;
}

void BallGyrogroup::requireMember(const BallElement& u) const {
  if (u.dimension() != dim_)
    throw InvalidElement("ball: expected dimension " + std::to_string(dim_) + ", got " +
                         std::to_string(u.dimension()));
  requireInside(u, margin_);
}

BallElement BallGyrogroup::add(const BallElement& u, const BallElement& v) const {
  if (u.dimension() != dim_ || v.dimension() != dim_) throw InvalidElement("ball: dimension mismatch");
  if (!(u.normSquared() < 1) || !(v.normSquared() < 1)) throw InvalidElement("ball: argument outside the open ball");
  return model_ == BallModel::Mobius ? mobius(u, v) : einstein(u, v);
}

BallElement BallGyrogroup::negate(const BallElement& u) const {
  BallElement w = u;
  for (auto& x : w.coords) x = -x;
  return w;
}

double BallGyrogroup::distance(const BallElement& u, const BallElement& v) const {
  Real s = 0;
  for (std::size_t i = 0; i < u.coords.size(); ++i) {
    const Real d = u.coords[i] - v.coords[i];
    s += d * d;
  }
  return static_cast<double>(sqrtq(s));
}

BallElement BallGyrogroup::sample(std::mt19937_64& rng, double maxNorm) const {
  std::normal_distribution<double> normal;
  std::uniform_real_distribution<double> uniform;
  std::vector<double> dir(dim_);
  double len = 0;
  do {
    len = 0;
    for (auto& x : dir) {
      x = normal(rng);
      len += x * x;
    }
  } while (len == 0);
  const double radius = maxNorm * std::pow(uniform(rng), 1.0 / static_cast<double>(dim_));
  BallElement e;
  e.coords.reserve(dim_);
  const Real scale = Real(radius) / sqrtq(Real(len));
  for (double x : dir) e.coords.push_back(Real(x) * scale);
  return e;
}

GyrationMatrix ballGyrationMatrix(const BallGyrogroup& g, const BallElement& a, const BallElement& b,
                                  std::uint64_t seed, std::size_t probes, double scale) {
  g.requireMember(a);
  g.requireMember(b);
  const std::size_t n = g.dimension();
  std::vector<std::vector<Real>> m(n, std::vector<Real>(n));
  for (std::size_t j = 0; j < n; ++j) {
    BallElement e = g.zero();
    e.coords[j] = Real(scale);
    const BallElement col = gyration(g, a, b, e);
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col.coords[i] / Real(scale);
  }

  GyrationMatrix out;
  out.matrix.resize(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = static_cast<double>(m[i][j]);

  // M^T M - I, accumulated in binary128 before rounding.
  Real frob = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Real s = (i == j) ? Real(-1) : Real(0);
      for (std::size_t k = 0; k < n; ++k) s += m[k][i] * m[k][j];
      frob += s * s;
    }
  out.orthogonalityResidual = static_cast<double>(sqrtq(frob));

  auto rng = streamEngine(seed, 0);
  for (std::size_t p = 0; p < probes; ++p) {
    const BallElement c = g.sample(rng);
    const BallElement image = gyration(g, a, b, c);
    Real err = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Real mc = 0;
      for (std::size_t k = 0; k < n; ++k) mc += m[i][k] * c.coords[k];
      const Real d = image.coords[i] - mc;
      err += d * d;
    }
    out.linearityResidual = std::max(out.linearityResidual, static_cast<double>(sqrtq(err)));
  }
  out.probes = probes;
  return out;
}

bool BallReport::passed() const {
  return allPassed(axioms) && cancellation.allPassed() && orthogonality.passed() && linearity.passed() &&
         closure.passed();
}

BallReport analyzeBall(const BallGyrogroup& g, std::size_t samples, std::uint64_t seed, AxiomTolerances tol) {
  BallReport r;
  r.seed = seed;
  r.samples = samples;

  std::vector<Triple<BallElement>> triples(samples);
  std::vector<std::pair<BallElement, BallElement>> pairs(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    auto rng = streamEngine(seed, i);
    triples[i] = {g.sample(rng), g.sample(rng), g.sample(rng)};
    pairs[i] = {triples[i][0], triples[i][1]};
  }

  r.axioms = checkAxiomsSampled(g, std::span<const Triple<BallElement>>(triples), tol);
  r.cancellation = checkCancellationLaws(g, std::span<const std::pair<BallElement, BallElement>>(pairs));

  r.orthogonality = {"gyration-orthogonality", 0.0, tol.automorphism, 0};
  r.linearity = {"gyration-linearity", 0.0, tol.automorphism, 0};
  r.closure.name = "closure";
  std::vector<GyrationMatrix> matrices(samples);
  std::vector<char> inside(samples, 1);
  std::vector<std::exception_ptr> errors(samples);
  const auto sn = static_cast<std::ptrdiff_t>(samples);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t si = 0; si < sn; ++si) {
    const auto i = static_cast<std::size_t>(si);
    try {
      const auto& [a, b, c] = triples[i];
      matrices[i] = ballGyrationMatrix(g, a, b, deriveSeed(seed, samples + i), 4);
      inside[i] = g.add(a, b).normSquared() < 1 && g.add(a, g.add(b, c)).normSquared() < 1;
    } catch (const NumericalError&) {
      inside[i] = 0;
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (std::size_t i = 0; i < samples; ++i) {
    r.orthogonality.observe(matrices[i].orthogonalityResidual);
    r.linearity.observe(matrices[i].linearityResidual);
    if (!inside[i]) r.closure.fail({static_cast<std::uint32_t>(i)});
  }
  return r;
}

}  // namespace gyro
