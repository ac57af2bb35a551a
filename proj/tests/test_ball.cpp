#include <gtest/gtest.h>

#include <cmath>

#include "gyro/ball.hpp"
#include "gyro/error.hpp"
#include "gyro/sampling.hpp"

using namespace gyro;

namespace {

constexpr double kAngle = -0.238857852036677;  // oracle rotation angle for a=(0.3,0), b=(0,0.4)

std::vector<BallModel> models() { return {BallModel::Mobius, BallModel::Einstein}; }

}  // namespace

TEST(BallAddition, MobiusCollinearHalves) {
  const auto u = BallElement::fromDoubles({0.5, 0});
  const auto w = mobiusAdd(u, u).toDoubles();
  EXPECT_NEAR(w[0], 0.8, 1e-12);
  EXPECT_NEAR(w[1], 0.0, 1e-12);
}

TEST(BallAddition, EinsteinCollinearHalves) {
  const auto u = BallElement::fromDoubles({0.5, 0});
  const auto w = einsteinAdd(u, u).toDoubles();
  EXPECT_NEAR(w[0], 0.8, 1e-12);
  EXPECT_NEAR(w[1], 0.0, 1e-12);
}

TEST(BallAddition, ZeroAndInverse) {
  for (auto model : models()) {
    const BallGyrogroup g(3, model);
    const auto u = g.element({0.6, -0.3, 0.5});
    EXPECT_TRUE(g.equal(g.add(u, g.zero()), u));
    EXPECT_TRUE(g.equal(g.add(g.zero(), u), u));
    EXPECT_TRUE(g.equal(g.add(g.negate(u), u), g.zero()));
    EXPECT_TRUE(g.equal(g.add(u, g.negate(u)), g.zero()));
  }
}

TEST(BallAddition, FreeFunctionsEnforceMargin) {
  const auto inside = BallElement::fromDoubles({0.5, 0});
  const auto edge = BallElement::fromDoubles({1.0 - 1e-7, 0});
  EXPECT_THROW(mobiusAdd(edge, inside), InvalidElement);
  EXPECT_THROW(einsteinAdd(inside, edge), InvalidElement);
  EXPECT_THROW(lorentzGamma(edge), InvalidElement);
  EXPECT_THROW(mobiusAdd(inside, BallElement::fromDoubles({0.1, 0, 0})), InvalidElement);
  EXPECT_NO_THROW(mobiusAdd(edge, inside, 1e-8));
}

TEST(LorentzGamma, KnownValues) {
  EXPECT_NEAR(static_cast<double>(lorentzGamma(BallElement::fromDoubles({0, 0}))), 1.0, 1e-15);
  EXPECT_NEAR(static_cast<double>(lorentzGamma(BallElement::fromDoubles({0.5, 0}))), 2.0 / std::sqrt(3.0), 1e-12);
  EXPECT_NEAR(static_cast<double>(lorentzGamma(BallElement::fromDoubles({0.8, 0}))), 5.0 / 3.0, 1e-12);
  EXPECT_NEAR(static_cast<double>(lorentzGamma(BallElement::fromDoubles({0.48, 0.64}))), 5.0 / 3.0, 1e-12);
}

TEST(BallGyrogroup, ConstructorValidatesParameters) {
  EXPECT_THROW(BallGyrogroup(0, BallModel::Mobius), std::invalid_argument);
  EXPECT_THROW(BallGyrogroup(2, BallModel::Mobius, 0.0), std::invalid_argument);
  EXPECT_THROW(BallGyrogroup(2, BallModel::Mobius, 1e-9, 1.0), std::invalid_argument);
  EXPECT_EQ(parseBallModel("einstein"), BallModel::Einstein);
  EXPECT_THROW(parseBallModel("poincare"), std::invalid_argument);
}

TEST(BallGyrogroup, SamplesStayWithinRequestedNorm) {
  const BallGyrogroup g(4, BallModel::Mobius);
  auto rng = streamEngine(3, 0);
  double largest = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto s = g.sample(rng);
    ASSERT_LE(s.norm(), 0.99 + 1e-15);
    largest = std::max(largest, s.norm());
  }
  EXPECT_GT(largest, 0.95);
}

TEST(GyrationMatrix, TrivialGeneratorsGiveIdentity) {
  for (auto model : models()) {
    const BallGyrogroup g(3, model);
    const auto a = g.element({0.3, 0.2, -0.1});
    for (const auto& m : {ballGyrationMatrix(g, g.zero(), a, 1), ballGyrationMatrix(g, a, g.zero(), 1)}) {
      EXPECT_TRUE(m.matrix.isApprox(Eigen::MatrixXd::Identity(3, 3), 1e-12));
      EXPECT_LE(m.linearityResidual, 1e-12);
    }
  }
}

TEST(GyrationMatrix, CollinearGeneratorsGiveIdentity) {
  const BallGyrogroup g(2, BallModel::Mobius);
  const auto m = ballGyrationMatrix(g, g.element({0.3, 0}), g.element({0.6, 0}), 5);
  EXPECT_LE((m.matrix - Eigen::MatrixXd::Identity(2, 2)).norm(), 1e-9);
}

TEST(GyrationMatrix, MobiusRotationMatchesOracle) {
  const BallGyrogroup g(2, BallModel::Mobius);
  const auto m = ballGyrationMatrix(g, g.element({0.3, 0}), g.element({0, 0.4}), 9);
  Eigen::Matrix2d want;
  want << std::cos(kAngle), -std::sin(kAngle), std::sin(kAngle), std::cos(kAngle);
  EXPECT_LE((m.matrix - want).norm(), 1e-9);
  EXPECT_LE(m.orthogonalityResidual, 1e-9);
  EXPECT_LE(m.linearityResidual, 1e-9);
  EXPECT_NEAR(m.matrix(0, 0), 0.9716088328075709, 1e-12);
  EXPECT_NEAR(m.matrix(1, 0), -0.23659305993690852, 1e-12);
}

TEST(BallAnalysis, SampledAxiomsHoldForBothModels) {
  for (auto model : models()) {
    const BallGyrogroup g(3, model);
    const auto r = analyzeBall(g, 1000, 42);
    for (const auto& c : r.axioms) EXPECT_TRUE(c.passed()) << to_string(model) << " " << c.name << " " << c.maxResidual;
    EXPECT_TRUE(r.cancellation.allPassed()) << to_string(model);
    EXPECT_TRUE(r.orthogonality.passed()) << r.orthogonality.maxResidual;
    EXPECT_TRUE(r.linearity.passed()) << r.linearity.maxResidual;
    EXPECT_TRUE(r.closure.passed());
    EXPECT_TRUE(r.passed());
  }
}

TEST(BallAnalysis, DeterministicForFixedSeed) {
  const BallGyrogroup g(2, BallModel::Einstein);
  const auto a = analyzeBall(g, 200, 17);
  const auto b = analyzeBall(g, 200, 17);
  for (std::size_t i = 0; i < a.axioms.size(); ++i) EXPECT_EQ(a.axioms[i].maxResidual, b.axioms[i].maxResidual);
  EXPECT_EQ(a.orthogonality.maxResidual, b.orthogonality.maxResidual);
}

TEST(BallAnalysis, HigherDimensionsAlsoPass) {
  for (auto model : models()) {
    const BallGyrogroup g(5, model);
    EXPECT_TRUE(analyzeBall(g, 200, 99).passed()) << to_string(model);
  }
}
