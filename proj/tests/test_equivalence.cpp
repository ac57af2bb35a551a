#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "fixtures.hpp"
#include "gyro/equivalence.hpp"
#include "gyro/error.hpp"

using namespace gyro;

namespace {

/// Disjoint union of the coset actions over `hs`, in order.
FiniteGSet unionOfCosetActions(const FiniteGyrogroup& g, const std::vector<Subset>& hs) {
  std::vector<ActionTable> parts;
  std::size_t points = 0;
  for (const auto& h : hs) {
    parts.push_back(*cosetActionTable(g, h));
    points += parts.back().points;
  }
  std::vector<std::vector<Point>> perms(g.order(), std::vector<Point>(points));
  for (Elem a = 0; a < g.order(); ++a) {
    std::size_t offset = 0;
    for (const auto& p : parts) {
      for (Point x = 0; x < p.points; ++x) perms[a][offset + x] = static_cast<Point>(offset + p.at(a, x));
      offset += p.points;
    }
  }
  return actionFromHomomorphism(g, perms);
}

FiniteGSet cosetSpace(const FiniteGyrogroup& g, const Subset& h) { return buildCosetAction(g, h).gset; }

}  // namespace

TEST(GMap, IdentityIsEquivalence) {
  const auto g = fixtures::gyrogroup(fixtures::symmetric3());
  const auto x = requireAction(g, fixtures::conjugationAction(g));
  const auto id = identityMap(x);
  EXPECT_TRUE(isGMap(id));
  EXPECT_TRUE(isEquivalence(id));
}

TEST(GMap, WitnessForBrokenEquivariance) {
  const auto g = fixtures::gyrogroup(fixtures::cyclic(2));
  const auto swap = requireAction(g, selfActionTable(g));
  const auto fixed = requireAction(g, trivialActionTable(g, 2));
  const auto c = checkGMap(GMap{swap, fixed, {0, 1}});
  ASSERT_FALSE(c.passed());
  EXPECT_EQ(c.witnesses.front(), (Witness{1, 0}));
  // Collapsing onto one fixed point is equivariant but not bijective.
  const auto one = requireAction(g, trivialActionTable(g, 1));
  EXPECT_TRUE(isGMap(GMap{swap, one, {0, 0}}));
  EXPECT_FALSE(isEquivalence(GMap{swap, one, {0, 0}}));
  EXPECT_THROW(checkGMap(GMap{swap, fixed, {0, 2}}), PreconditionError);
}

TEST(GMap, CarrierMismatchIsRejected) {
  const auto z2 = fixtures::gyrogroup(fixtures::cyclic(2));
  const auto z3 = fixtures::gyrogroup(fixtures::cyclic(3));
  const auto x = requireAction(z2, trivialActionTable(z2, 1));
  const auto y = requireAction(z3, trivialActionTable(z3, 1));
  EXPECT_THROW(checkGMap(GMap{x, y, {0}}), CarrierMismatch);
  EXPECT_THROW(areEquivalentTransitive(x, y), CarrierMismatch);
}

TEST(FundamentalIsomorphism, TrivialRegularAndConjugation) {
  const auto z3 = fixtures::gyrogroup(fixtures::cyclic(3));
  const auto triv = fundamentalIsomorphism(requireAction(z3, trivialActionTable(z3, 1)), 0);
  EXPECT_EQ(triv.cosetSpace.gset.size(), 1u);
  EXPECT_TRUE(isEquivalence(triv.phi));

  const auto reg = fundamentalIsomorphism(requireAction(z3, selfActionTable(z3)), 2);
  EXPECT_EQ(reg.cosetSpace.gset.size(), 3u);
  EXPECT_EQ(reg.orbit, (Subset{0, 1, 2}));
  EXPECT_TRUE(isEquivalence(reg.phi));

  const auto s3 = fixtures::gyrogroup(fixtures::symmetric3());
  const auto conj = requireAction(s3, fixtures::conjugationAction(s3));
  for (Point z = 0; z < 6; ++z) {
    const auto f = fundamentalIsomorphism(conj, z);
    EXPECT_TRUE(isEquivalence(f.phi)) << z;
    EXPECT_EQ(f.orbitSet.size() * stabilizer(conj, z).size(), 6u);
  }
  EXPECT_EQ(fundamentalIsomorphism(conj, 4).orbit, (Subset{3, 4, 5}));
}

TEST(TransitiveEquivalence, ConjugateStabilizersAreEquivalent) {
  const auto g = fixtures::gyrogroup(fixtures::symmetric3());
  const auto d = areEquivalentTransitive(cosetSpace(g, {0, 3}), cosetSpace(g, {0, 4}));
  EXPECT_TRUE(d.equivalent);
  ASSERT_TRUE(d.conjugator.has_value());
  ASSERT_TRUE(d.witness.has_value());
  EXPECT_TRUE(isEquivalence(*d.witness));
  ASSERT_TRUE(d.exhaustive.has_value());
  EXPECT_TRUE(*d.exhaustive);
}

TEST(TransitiveEquivalence, SameSizeDifferentStabilizers) {
  const auto g = fixtures::gyrogroup(fixtures::klein());
  const auto d = areEquivalentTransitive(cosetSpace(g, {0, 1}), cosetSpace(g, {0, 2}));
  EXPECT_FALSE(d.equivalent);
  EXPECT_FALSE(d.witness.has_value());
  EXPECT_TRUE(d.agreesWithExhaustive());
}

TEST(TransitiveEquivalence, RequiresTransitivity) {
  const auto g = fixtures::gyrogroup(fixtures::symmetric3());
  const auto conj = requireAction(g, fixtures::conjugationAction(g));
  try {
    areEquivalentTransitive(conj, conj);
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.hypothesis(), "transitive");
  }
}

TEST(TransitiveEquivalence, AgreesWithExhaustiveSearch) {
  std::size_t compared = 0;
  for (const auto& f : fixtures::finiteFixtures()) {
    const auto g = fixtures::gyrogroup(f.table);
    std::vector<FiniteGSet> spaces;
    for (const auto& h : enumerateSubgyrogroups(g)) {
      if (!cosetCriterion(g, h.members).passed()) continue;
      auto x = cosetSpace(g, h.members);
      if (x.size() <= kExhaustiveLimit) spaces.push_back(std::move(x));
    }
    for (const auto& x : spaces)
      for (const auto& y : spaces) {
        if (x.size() != y.size()) continue;
        const auto d = areEquivalentTransitive(x, y);
        ASSERT_TRUE(d.exhaustive.has_value());
        EXPECT_TRUE(d.agreesWithExhaustive()) << f.name;
        if (d.witness) {
          EXPECT_TRUE(isEquivalence(*d.witness)) << f.name;
        }
        ++compared;
      }
  }
  EXPECT_GT(compared, 100u);
}

TEST(TransitiveEquivalence, RelabeledCopiesAreEquivalent) {
  std::mt19937_64 rng(9);
  for (const auto& f : fixtures::groupTables()) {
    const auto g = fixtures::gyrogroup(f.table);
    for (const auto& h : enumerateSubgyrogroups(g)) {
      const auto x = cosetSpace(g, h.members);
      std::vector<Point> relabel(x.size());
      std::iota(relabel.begin(), relabel.end(), Point{0});
      std::shuffle(relabel.begin(), relabel.end(), rng);
      std::vector<std::vector<Point>> perms(g.order(), std::vector<Point>(x.size()));
      for (Elem a = 0; a < g.order(); ++a)
        for (Point p = 0; p < x.size(); ++p) perms[a][relabel[p]] = relabel[x.act(a, p)];
      const auto y = actionFromHomomorphism(g, perms);
      const auto d = areEquivalentTransitive(x, y);
      EXPECT_TRUE(d.equivalent) << f.name;
      ASSERT_TRUE(d.witness.has_value());
      EXPECT_TRUE(isEquivalence(*d.witness));
    }
  }
}

TEST(ExhaustiveEquivalence, RefusesLargeSets) {
  const auto g = fixtures::gyrogroup(fixtures::cyclic(7));
  const auto x = requireAction(g, selfActionTable(g));
  EXPECT_THROW(exhaustiveEquivalence(x, x), PreconditionError);
}

TEST(Matching, SelfMatchingIsIdentity) {
  const auto g = fixtures::gyrogroup(fixtures::symmetric3());
  const auto x = requireAction(g, fixtures::conjugationAction(g));
  const auto m = matchComponents(x, x);
  EXPECT_TRUE(m.equivalent);
  ASSERT_EQ(m.match.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(m.match[i], std::optional<std::size_t>(i));
  ASSERT_TRUE(m.equivalence.has_value());
  EXPECT_EQ(m.equivalence->map, (std::vector<Point>{0, 1, 2, 3, 4, 5}));
}

TEST(Matching, SwappedComponents) {
  const auto g = fixtures::gyrogroup(fixtures::cyclic(6));
  const auto x = unionOfCosetActions(g, {{0, 3}, {0, 2, 4}});
  const auto y = unionOfCosetActions(g, {{0, 2, 4}, {0, 3}});
  const auto m = matchComponents(x, y);
  EXPECT_TRUE(m.equivalent);
  EXPECT_EQ(m.match[0], std::optional<std::size_t>(1));
  EXPECT_EQ(m.match[1], std::optional<std::size_t>(0));
  ASSERT_TRUE(m.equivalence.has_value());
  EXPECT_TRUE(isEquivalence(*m.equivalence));
}

TEST(Matching, RefusesDifferentStabilizerOrders) {
  const auto g = fixtures::gyrogroup(fixtures::cyclic(6));
  // Six points each, but the stabilizer orders differ.
  const auto x = unionOfCosetActions(g, {{0, 3}, {0, 2, 4}, {0, 1, 2, 3, 4, 5}});
  const auto y = unionOfCosetActions(g, {{0, 2, 4}, {0, 2, 4}, {0, 2, 4}});
  const auto m = matchComponents(x, y);
  EXPECT_FALSE(m.equivalent);
  EXPECT_FALSE(m.equivalence.has_value());
  EXPECT_FALSE(m.match[0].has_value());
  EXPECT_TRUE(m.match[1].has_value());
  EXPECT_FALSE(m.match[2].has_value());
  EXPECT_EQ(m.unmatchedLeft, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(m.unmatchedRight.size(), 2u);
}

TEST(Matching, EqualComponentsMatchInOrder) {
  const auto g = fixtures::gyrogroup(fixtures::cyclic(4));
  const auto x = unionOfCosetActions(g, {{0, 2}, {0, 2}});
  const auto y = unionOfCosetActions(g, {{0, 2}, {0, 2}});
  const auto m = matchComponents(x, y);
  EXPECT_TRUE(m.equivalent);
  EXPECT_EQ(m.match[0], std::optional<std::size_t>(0));
  EXPECT_EQ(m.match[1], std::optional<std::size_t>(1));
}

TEST(Matching, RandomUnionsMatchTheirRelabelings) {
  std::mt19937_64 rng(123);
  for (const auto& f : fixtures::finiteFixtures()) {
    const auto g = fixtures::gyrogroup(f.table);
    const auto x = fixtures::randomCosetUnionAction(g, rng);
    const auto m = matchComponents(x, x);
    EXPECT_TRUE(m.equivalent) << f.name;
    ASSERT_TRUE(m.equivalence.has_value());
    EXPECT_TRUE(isEquivalence(*m.equivalence));
  }
}
