#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "gyro/ball.hpp"
#include "gyro/carrier.hpp"
#include "gyro/finite_gyrogroup.hpp"

using namespace gyro;

namespace {

// High-precision oracle values (50-digit evaluation of the gyrator identity).
constexpr double kMobiusGyr[2] = {0.0971608832807571, -0.0236593059936909};  // (154/1585, -15/634)
constexpr double kEinsteinGyr[2] = {0.099794836475346529704, -0.0064023911828976698395};

void expectNear(const BallElement& v, std::initializer_list<double> want, double tol) {
  const auto got = v.toDoubles();
  ASSERT_EQ(got.size(), want.size());
  std::size_t i = 0;
  for (double w : want) EXPECT_NEAR(got[i++], w, tol) << "coordinate " << i - 1;
}

}  // namespace

TEST(Gyration, IdentityGeneratorsActTrivially) {
  for (const auto& f : fixtures::finiteFixtures()) {
    const auto g = fixtures::gyrogroup(f.table);
    for (Elem b = 0; b < g.order(); ++b)
      for (Elem c = 0; c < g.order(); ++c) {
        EXPECT_EQ(gyration(g, Elem{0}, b, c), c) << f.name;
        EXPECT_EQ(gyration(g, b, Elem{0}, c), c) << f.name;
      }
  }
}

TEST(Gyration, CyclicGroupIsDegenerate) {
  const auto g = fixtures::gyrogroup(fixtures::cyclic(5));
  EXPECT_EQ(gyration(g, Elem{2}, Elem{3}, Elem{4}), 4u);
  EXPECT_TRUE(g.isDegenerate());
}

TEST(Gyration, CachedTableMatchesGyratorIdentity) {
  const auto g = fixtures::gyrogroup(fixtures::glauberman(7, 3));
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      for (Elem c = 0; c < g.order(); ++c) ASSERT_EQ(g.gyr(a, b, c), gyration(g, a, b, c));
}

TEST(Gyration, GyroassociativeAndLoopPropertyOnNondegenerateLoop) {
  const auto g = fixtures::gyrogroup(fixtures::glauberman(7, 3));
  EXPECT_FALSE(g.isDegenerate());
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b)
      for (Elem c = 0; c < g.order(); ++c) {
        ASSERT_EQ(g.add(a, g.add(b, c)), g.add(g.add(a, b), gyration(g, a, b, c)));
        ASSERT_EQ(gyration(g, g.add(a, b), b, c), gyration(g, a, b, c));
      }
}

TEST(GyrationMap, FixesIdentityAndRespectsAddition) {
  const auto g = fixtures::gyrogroup(fixtures::glauberman(7, 3));
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) {
      GyrationMap<FiniteGyrogroup> m(g, a, b);
      ASSERT_EQ(m(0), 0u);
      for (Elem u = 0; u < g.order(); ++u)
        for (Elem v = 0; v < g.order(); ++v) ASSERT_EQ(m(g.add(u, v)), g.add(m(u), m(v)));
    }
}

TEST(Coaddition, ReducesToAdditionOnGroups) {
  for (const auto& f : fixtures::groupTables()) {
    const auto g = fixtures::gyrogroup(f.table);
    for (Elem a = 0; a < g.order(); ++a) {
      EXPECT_EQ(coaddition(g, a, Elem{0}), a);
      for (Elem b = 0; b < g.order(); ++b) ASSERT_EQ(coaddition(g, a, b), g.add(a, b)) << f.name;
    }
  }
}

TEST(Coaddition, ZeroIsRightIdentityOnLoop) {
  const auto g = fixtures::gyrogroup(fixtures::glauberman(7, 3));
  for (Elem a = 0; a < g.order(); ++a) EXPECT_EQ(coaddition(g, a, Elem{0}), a);
}

TEST(Conjugate, MatchesGroupConjugationOnS3) {
  const auto g = fixtures::gyrogroup(fixtures::symmetric3());
  for (Elem a = 0; a < 6; ++a) {
    EXPECT_EQ(conjugate(g, a, Elem{0}), 0u);
    for (Elem b = 0; b < 6; ++b) EXPECT_EQ(conjugate(g, a, b), g.add(g.add(a, b), g.negate(a)));
  }
}

TEST(Conjugate, VanishesExactlyAtZero) {
  const auto g = fixtures::gyrogroup(fixtures::glauberman(7, 3));
  for (Elem a = 0; a < g.order(); ++a)
    for (Elem b = 0; b < g.order(); ++b) ASSERT_EQ(conjugate(g, a, b) == 0, b == 0) << a << "," << b;
}

TEST(Conjugate, SetVersionMapsElementwise) {
  const auto g = fixtures::gyrogroup(fixtures::symmetric3());
  const std::vector<Elem> s = {0, 3};
  const auto c = conjugateSet(g, Elem{1}, std::span<const Elem>(s));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c[0], 0u);
  EXPECT_EQ(c[1], conjugate(g, Elem{1}, Elem{3}));
}

TEST(Cancellation, AllLawsHoldExhaustivelyOnFixtures) {
  for (const auto& f : fixtures::finiteFixtures()) {
    const auto g = fixtures::gyrogroup(f.table);
    const auto e = g.elements();
    const auto r = checkCancellationLaws(g, std::span<const Elem>(e));
    EXPECT_TRUE(r.allPassed()) << f.name;
  }
}

TEST(Cancellation, CorruptedTableFailsGeneralLeftCancellation) {
  const auto t = fixtures::cyclic(6).withEntry(1, 1, 3);  // row 1 now has 3 twice
  TableMagma m(t);
  const auto e = std::vector<Elem>{0, 1, 2, 3, 4, 5};
  const auto r = checkCancellationLaws(m, std::span<const Elem>(e));
  const auto& law = r[CancellationLaw::GeneralLeft];
  ASSERT_FALSE(law.passed());
  EXPECT_EQ(law.witnesses.front(), (Witness{1, 1, 2}));
  EXPECT_EQ(m.add(1, 1), m.add(1, 2));
}

TEST(SampledAxioms, ExactCarrierHasZeroResiduals) {
  const auto g = fixtures::gyrogroup(fixtures::glauberman(7, 3));
  std::vector<Triple<Elem>> triples;
  for (Elem a = 0; a < g.order(); a += 2)
    for (Elem b = 0; b < g.order(); b += 3)
      for (Elem c = 0; c < g.order(); c += 5) triples.push_back({a, b, c});
  for (const auto& c : checkAxiomsSampled(g, std::span<const Triple<Elem>>(triples))) {
    EXPECT_EQ(c.maxResidual, 0.0) << c.name;
    EXPECT_EQ(c.samples, triples.size());
  }
}

TEST(BallGyration, MobiusMatchesOracle) {
  const BallGyrogroup g(2, BallModel::Mobius);
  const auto v = gyration(g, g.element({0.3, 0}), g.element({0, 0.4}), g.element({0.1, 0}));
  expectNear(v, {kMobiusGyr[0], kMobiusGyr[1]}, 1e-12);
}

TEST(BallGyration, EinsteinMatchesOracle) {
  const BallGyrogroup g(2, BallModel::Einstein);
  const auto v = gyration(g, g.element({0.3, 0}), g.element({0, 0.4}), g.element({0.1, 0}));
  expectNear(v, {kEinsteinGyr[0], kEinsteinGyr[1]}, 1e-12);
}

TEST(BallCoaddition, MatchesOracle) {
  const BallGyrogroup m(2, BallModel::Mobius);
  expectNear(coaddition(m, m.element({0.5, 0}), m.element({0, 0.5})), {0.4, 0.4}, 1e-12);
  const BallGyrogroup e(2, BallModel::Einstein);
  expectNear(coaddition(e, e.element({0.5, 0}), e.element({0, 0.5})), {4.0 / 9, 4.0 / 9}, 1e-12);
}

TEST(BallCoaddition, ZeroIsRightIdentity) {
  for (auto model : {BallModel::Mobius, BallModel::Einstein}) {
    const BallGyrogroup g(3, model);
    const auto a = g.element({0.2, -0.5, 0.4});
    EXPECT_TRUE(g.equal(coaddition(g, a, g.zero()), a));
    EXPECT_TRUE(g.equal(conjugate(g, a, g.zero()), g.zero()));
  }
}

TEST(BallGyration, InvalidElementIsRejected) {
  const BallGyrogroup g(2, BallModel::Mobius);
  EXPECT_THROW(g.element({1.0, 0.0}), InvalidElement);
  EXPECT_THROW(g.element({0.1}), InvalidElement);
  BallElement outside = BallElement::fromDoubles({1.5, 0});
  EXPECT_THROW(gyration(g, outside, g.zero(), g.zero()), InvalidElement);
}
