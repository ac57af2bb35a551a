#include "gyro/pair.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

#include "gyro/error.hpp"
#include "gyro/sampling.hpp"

namespace gyro {

PairGyrogroup::PairGyrogroup(BallModel model, std::uint32_t m, double epsilon, double margin)
    : ball_(2, model, epsilon, margin), m_(m) {
  if (m_ == 0) throw std::invalid_argument("pairs: rotation order must be at least 1");
}

PairElement PairGyrogroup::element(std::initializer_list<double> u, std::uint32_t r) const {
  if (r >= m_) throw InvalidElement("pairs: rotation index " + std::to_string(r) + " >= m");
  return {ball_.element(u), r};
}

PairElement PairGyrogroup::add(const PairElement& x, const PairElement& y) const {
  return {ball_.add(x.u, y.u), (x.r + y.r) % m_};
}

PairElement PairGyrogroup::negate(const PairElement& x) const { return {ball_.negate(x.u), (m_ - x.r) % m_}; }

double PairGyrogroup::distance(const PairElement& x, const PairElement& y) const {
  return ball_.distance(x.u, y.u) + (x.r == y.r ? 0.0 : 1.0);
}

PairElement PairGyrogroup::sample(std::mt19937_64& rng, double maxNorm) const {
  PairElement x{ball_.sample(rng, maxNorm), 0};
  x.r = std::uniform_int_distribution<std::uint32_t>(0, m_ - 1)(rng);
  return x;
}

PairElement pairGyration(const PairGyrogroup& g, const PairElement& x, const PairElement& y, const PairElement& z) {
  return {gyration(g.ball(), x.u, y.u, z.u), z.r};
}

namespace {

struct Samples {
  std::vector<Triple<PairElement>> triples;
  std::vector<PairElement> hat;  // members of B x {0}
};

Samples draw(const PairGyrogroup& g, std::size_t samples, std::uint64_t seed) {
  Samples s;
  s.triples.resize(samples);
  s.hat.resize(samples);
  for (std::size_t i = 0; i < samples; ++i) {
    auto rng = streamEngine(seed, i);
    s.triples[i] = {g.sample(rng), g.sample(rng), g.sample(rng)};
    s.hat[i] = {g.ball().sample(rng), 0};
  }
  return s;
}

CriterionReport hatCriterion(const PairGyrogroup& g, const Samples& s, std::uint64_t seed) {
  return cosetCriterionSampled<PairGyrogroup>(g, s.triples, s.hat, [](const PairElement& x) { return x.r == 0; },
                                              seed);
}

CheckResult check(const char* name) {
  CheckResult c;
  c.name = name;
  return c;
}

}  // namespace

HatCosetSpace::HatCosetSpace(const PairGyrogroup& g, std::size_t samples, std::uint64_t seed) : g_(g) {
  criterion_ = hatCriterion(g, draw(g, samples, seed), seed);
  for (const CheckResult* c : {&criterion_.gyrationInvariance, &criterion_.cosetDisplacement})
    if (!c->passed()) throw CriterionError(c->name, "coset criterion fails for B^: " + c->name, c->witnesses.front());
}

bool PairReport::passed() const {
  return allPassed(axioms) && cancellation.allPassed() && gyrationFormula.passed() && criterion.passed() &&
         allPassed(cosetChecks);
}

PairReport analyzePairs(const PairGyrogroup& g, std::size_t samples, std::uint64_t seed, AxiomTolerances tol) {
  PairReport r;
  r.seed = seed;
  r.samples = samples;
  r.m = g.rotations();
  const std::uint32_t m = g.rotations();
  const Samples s = draw(g, samples, seed);

  r.axioms = checkAxiomsSampled(g, std::span<const Triple<PairElement>>(s.triples), tol);
  std::vector<std::pair<PairElement, PairElement>> pairs;
  pairs.reserve(samples);
  for (const auto& t : s.triples) pairs.emplace_back(t[0], t[1]);
  r.cancellation = checkCancellationLaws(g, std::span<const std::pair<PairElement, PairElement>>(pairs));

  r.gyrationFormula = {"gyration-formula", 0.0, tol.equality, 0};
  std::vector<double> formula(samples, 0.0), moved(samples, 0.0);
  std::vector<std::exception_ptr> errors(samples);
  const auto sn = static_cast<std::ptrdiff_t>(samples);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t si = 0; si < sn; ++si) {
    const auto i = static_cast<std::size_t>(si);
    try {
      const auto& [x, y, z] = s.triples[i];
      const auto direct = pairGyration(g, x, y, z);
      formula[i] = g.distance(direct, gyration(g, x, y, z));
      moved[i] = g.distance(direct, z);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (double d : formula) r.gyrationFormula.observe(d);

  r.criterion = hatCriterion(g, s, seed);

  // Coset space of B^.
  std::vector<char> seen(m, 0);
  for (const auto& t : s.triples)
    for (const auto& x : t) seen[hatCosetIndex(x)] = 1;
  r.cosetsObserved = static_cast<std::size_t>(std::count(seen.begin(), seen.end(), 1));
  auto count = check("coset-count");
  if (r.cosetsObserved != m) count.fail({static_cast<std::uint32_t>(r.cosetsObserved)});
  r.cosetChecks.push_back(count);

  auto transitive = check("transitive");
  std::vector<char> reached(m, 0);
  for (const auto& t : s.triples) reached[hatCosetAction(g, t[0], 0)] = 1;
  for (std::uint32_t k = 0; k < m; ++k)
    if (!reached[k]) transitive.fail({k});
  r.cosetChecks.push_back(transitive);

  auto axioms = check("action-axioms");
  auto rule = check("coset-rule");
  for (std::size_t i = 0; i < samples; ++i) {
    const auto& [a, b, x] = s.triples[i];
    const auto idx = static_cast<std::uint32_t>(i);
    const auto ab = g.add(a, b);
    for (std::uint32_t k = 0; k < m; ++k) {
      if (hatCosetAction(g, g.zero(), k) != k) axioms.fail({idx, k});
      if (hatCosetAction(g, a, hatCosetAction(g, b, k)) != hatCosetAction(g, ab, k)) axioms.fail({idx, k});
    }
    // a . (x + B^) = (a + x) + B^, also for another representative x + (w, 0).
    const auto shifted = g.add(x, s.hat[i]);
    if (hatCosetIndex(shifted) != hatCosetIndex(x)) rule.fail({idx});
    if (hatCosetIndex(g.add(a, x)) != hatCosetAction(g, a, hatCosetIndex(x))) rule.fail({idx});
    if (hatCosetIndex(g.add(a, shifted)) != hatCosetAction(g, a, hatCosetIndex(x))) rule.fail({idx});
  }
  r.cosetChecks.push_back(axioms);
  r.cosetChecks.push_back(rule);

  auto inHat = check("stabilizer-in-hat");
  std::size_t stabilizing = 0;
  for (std::size_t i = 0; i < samples; ++i)
    for (const auto& a : s.triples[i])
      if (hatCosetAction(g, a, 0) == 0) {
        ++stabilizing;
        if (a.r != 0) inHat.fail({static_cast<std::uint32_t>(i)});
      }
  if (stabilizing == 0) inHat.note = "no sampled element stabilizes coset 0";
  r.cosetChecks.push_back(inHat);

  // For each coset k: conj((0,k), h) stabilizes k for sampled h in B^, and is
  // not the identity when h is not.
  auto notSemiregular = check("not-semiregular");
  auto conjugates = check("conjugate-stabilizer");
  const std::size_t probes = std::min<std::size_t>(samples, 64);
  for (std::uint32_t k = 0; k < m; ++k) {
    const PairElement rot{g.ball().zero(), k};
    bool exhibited = false;
    for (std::size_t i = 0; i < probes; ++i) {
      const auto& h = s.hat[i];
      const auto c = conjugate(g, rot, h);
      const auto idx = static_cast<std::uint32_t>(i);
      if (hatCosetAction(g, c, k) != k) conjugates.fail({k, idx});
      // Back through the inverse conjugator: stab(k) is carried into B^.
      const auto back = conjugate(g, g.negate(rot), c);
      if (back.r != 0) conjugates.fail({k, idx});
      if (!g.equal(h, g.zero()) && !g.equal(c, g.zero()) && hatCosetAction(g, c, k) == k) exhibited = true;
    }
    if (!exhibited) notSemiregular.fail({k});
  }
  r.cosetChecks.push_back(notSemiregular);
  r.cosetChecks.push_back(conjugates);

  auto nontrivial = check("nontrivial-gyration");
  const auto far = std::max_element(moved.begin(), moved.end());
  if (far == moved.end() || !(*far > g.ball().epsilon())) {
    nontrivial.fail({});
  } else {
    nontrivial.note = "sample " + std::to_string(far - moved.begin()) + " moved by gyration";
  }
  r.cosetChecks.push_back(nontrivial);
  return r;
}

}  // namespace gyro
