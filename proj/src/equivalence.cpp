#include "gyro/equivalence.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

#include "gyro/error.hpp"

namespace gyro {

namespace {

void requireSameCarrier(const FiniteGSet& x, const FiniteGSet& y) {
  if (!x.carrier().sameCarrier(y.carrier())) throw CarrierMismatch("G-sets are defined over different gyrogroups");
}

bool isTransitive(const FiniteGSet& x) {
  std::vector<char> hit(x.size(), 0);
  for (Elem a = 0; a < x.carrier().order(); ++a) hit[x.act(a, 0)] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool commutes(const FiniteGSet& x, const FiniteGSet& y, const std::vector<Point>& map) {
  for (Elem a = 0; a < x.carrier().order(); ++a)
    for (Point p = 0; p < x.size(); ++p)
      if (map[x.act(a, p)] != y.act(a, map[p])) return false;
  return true;
}

}  // namespace

CheckResult checkGMap(const GMap& phi) {
  requireSameCarrier(phi.source, phi.target);
  if (phi.map.size() != phi.source.size()) throw PreconditionError("g-map", "map length differs from |X|");
  for (Point p = 0; p < phi.map.size(); ++p)
    if (phi.map[p] >= phi.target.size()) throw PreconditionError("g-map", "image outside the target", {p});
  CheckResult c;
  c.name = "g-map";
  for (Elem a = 0; a < phi.source.carrier().order(); ++a)
    for (Point p = 0; p < phi.source.size(); ++p)
      if (phi.map[phi.source.act(a, p)] != phi.target.act(a, phi.map[p])) c.fail({a, p});
  return c;
}

bool isGMap(const GMap& phi) { return checkGMap(phi).passed(); }

bool isEquivalence(const GMap& phi) {
  if (!isGMap(phi)) return false;
  if (phi.source.size() != phi.target.size()) return false;
  std::vector<char> hit(phi.target.size(), 0);
  for (Point y : phi.map) {
    if (hit[y]) return false;
    hit[y] = 1;
  }
  return true;
}

GMap identityMap(const FiniteGSet& x) {
  std::vector<Point> m(x.size());
  std::iota(m.begin(), m.end(), Point{0});
  return {x, x, std::move(m)};
}

FundamentalIsomorphism fundamentalIsomorphism(const FiniteGSet& x, Point z) {
  if (z >= x.size()) throw PreconditionError("point", "point out of range", {z});
  const auto& g = x.carrier();
  auto cosetSpace = buildCosetAction(g, stabilizer(x, z));

  std::vector<Point> orb;
  for (Elem a = 0; a < g.order(); ++a) orb.push_back(x.act(a, z));
  Subset orbit = normalized(std::move(orb));
  FiniteGSet orbitSet = restrictToInvariant(x, orbit);

  std::vector<Point> map;
  for (Elem rep : cosetSpace.cosets.representatives) {
    const Point image = x.act(rep, z);
    map.push_back(static_cast<Point>(std::lower_bound(orbit.begin(), orbit.end(), image) - orbit.begin()));
  }
  GMap phi{cosetSpace.gset, orbitSet, std::move(map)};
  if (!isEquivalence(phi)) throw InvariantViolation("fundamental isomorphism is not an equivalence");
  return {z, std::move(cosetSpace), std::move(orbit), std::move(orbitSet), std::move(phi)};
}

std::optional<GMap> exhaustiveEquivalence(const FiniteGSet& x, const FiniteGSet& y) {
  requireSameCarrier(x, y);
  if (x.size() > kExhaustiveLimit || y.size() > kExhaustiveLimit)
    throw PreconditionError("size", "exhaustive search is limited to " + std::to_string(kExhaustiveLimit) + " points");
  if (x.size() != y.size()) return std::nullopt;
  std::vector<Point> perm(x.size());
  std::iota(perm.begin(), perm.end(), Point{0});
  do {
    if (commutes(x, y, perm)) return GMap{x, y, perm};
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

EquivalenceDecision areEquivalentTransitive(const FiniteGSet& x, const FiniteGSet& y) {
  requireSameCarrier(x, y);
  if (!isTransitive(x)) throw PreconditionError("transitive", "first G-set is not transitive");
  if (!isTransitive(y)) throw PreconditionError("transitive", "second G-set is not transitive");
  const auto& g = x.carrier();

  EquivalenceDecision d;
  const Subset sx = stabilizer(x, 0);
  const Subset sy = stabilizer(y, 0);
  if (sx.size() == sy.size())
    for (Elem a = 0; a < g.order(); ++a)
      if (conjugateSubset(g, a, sy) == sx) {
        d.conjugator = a;
        break;
      }

  if (d.conjugator) {
    d.equivalent = true;
    // stab(a . y0) = conj(a, stab y0) = stab x0, so both fundamental
    // isomorphisms start from the same coset space.
    const auto fx = fundamentalIsomorphism(x, 0);
    const auto fy = fundamentalIsomorphism(y, y.act(*d.conjugator, 0));
    if (fx.cosetSpace.cosets.cosets != fy.cosetSpace.cosets.cosets)
      throw InvariantViolation("conjugate stabilizers produced different coset spaces");
    std::vector<Point> map(x.size());
    for (std::size_t i = 0; i < fx.phi.map.size(); ++i) map[fx.orbit[fx.phi.map[i]]] = fy.orbit[fy.phi.map[i]];
    GMap w{x, y, std::move(map)};
    if (!isEquivalence(w)) throw InvariantViolation("composed fundamental isomorphisms are not an equivalence");
    d.witness = std::move(w);
  }

  if (x.size() <= kExhaustiveLimit && y.size() <= kExhaustiveLimit) d.exhaustive = exhaustiveEquivalence(x, y).has_value();
  return d;
}

std::vector<Component> transitiveComponents(const FiniteGSet& x) {
  std::vector<Component> out;
  for (const auto& orbit : orbitsAndStabilizers(x).orbits) out.push_back({orbit, restrictToInvariant(x, orbit)});
  return out;
}

ComponentMatching matchComponents(const FiniteGSet& x, const FiniteGSet& y) {
  requireSameCarrier(x, y);
  ComponentMatching m;
  m.left = transitiveComponents(x);
  m.right = transitiveComponents(y);
  const std::size_t nl = m.left.size(), nr = m.right.size();

  std::vector<std::optional<GMap>> witness(nl * nr);
  std::vector<std::exception_ptr> errors(nl * nr);
  const auto total = static_cast<std::ptrdiff_t>(nl * nr);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t s = 0; s < total; ++s) {
    const auto idx = static_cast<std::size_t>(s);
    try {
      auto d = areEquivalentTransitive(m.left[idx / nr].gset, m.right[idx % nr].gset);
      witness[idx] = std::move(d.witness);
    } catch (...) {
      errors[idx] = std::current_exception();
    }
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  m.match.assign(nl, std::nullopt);
  std::vector<std::optional<std::size_t>> owner(nr);
  std::vector<char> visited;
  auto augment = [&](auto&& self, std::size_t i) -> bool {
    for (std::size_t j = 0; j < nr; ++j) {
      if (!witness[i * nr + j] || visited[j]) continue;
      visited[j] = 1;
      if (!owner[j] || self(self, *owner[j])) {
        owner[j] = i;
        m.match[i] = j;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < nl; ++i) {
    for (std::size_t j = 0; j < nr; ++j)
      if (witness[i * nr + j] && !owner[j]) {
        owner[j] = i;
        m.match[i] = j;
        break;
      }
    if (m.match[i]) continue;
    visited.assign(nr, 0);
    augment(augment, i);
  }

  for (std::size_t i = 0; i < nl; ++i)
    if (!m.match[i]) m.unmatchedLeft.push_back(i);
  for (std::size_t j = 0; j < nr; ++j)
    if (!owner[j]) m.unmatchedRight.push_back(j);
  m.equivalent = m.unmatchedLeft.empty() && m.unmatchedRight.empty();

  if (m.equivalent) {
    std::vector<Point> map(x.size());
    for (std::size_t i = 0; i < nl; ++i) {
      const std::size_t j = *m.match[i];
      const auto& local = witness[i * nr + j]->map;
      for (std::size_t p = 0; p < local.size(); ++p) map[m.left[i].points[p]] = m.right[j].points[local[p]];
    }
    GMap phi{x, y, std::move(map)};
    if (!isEquivalence(phi)) throw InvariantViolation("assembled component map is not an equivalence");
    m.equivalence = std::move(phi);
  }
  return m;
}

}  // namespace gyro
