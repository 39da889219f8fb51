#include <gtest/gtest.h>

#include <cmath>

#include "closed_forms.hpp"
#include "oracles.hpp"
#include "surfpen/error.hpp"
#include "surfpen/fixtures.hpp"
#include "surfpen/frames.hpp"

using namespace surfpen;

namespace {

struct Case {
  Curve curve;
  double theta0;
  closed_form::Frame (*frame)(double);
  double (*theta)(double);
};

std::vector<Case> cases() {
  return {{fixtures::unit_circle(), fixtures::circle_theta0(), closed_form::circle,
           [](double) { return closed_form::kPi / 2; }},
          {fixtures::helix(), fixtures::helix_theta0(), closed_form::helix, [](double s) { return 0.8 * s; }},
          {fixtures::y_helix(), fixtures::y_helix_theta0(), closed_form::y_helix, [](double s) { return -s / 2; }}};
}

Curve line() { return Curve::from_text("s", "0", "0", {0, 2}); }

}  // namespace

TEST(RmfByTheta, HelixThetaIsLinear) {
  const auto field = rmf_by_theta(fixtures::helix(), fixtures::helix_theta0(), 512);
  ASSERT_EQ(field.samples().size(), 513u);
  for (const auto& x : field.samples()) EXPECT_NEAR(x.theta, 0.8 * x.s, 1e-9);
}

TEST(RmfByTheta, YHelixThetaIsMinusHalfS) {
  const auto field = rmf_by_theta(fixtures::y_helix(), fixtures::y_helix_theta0(), 512);
  for (const auto& x : field.samples()) EXPECT_NEAR(x.theta, -x.s / 2, 1e-9);
}

TEST(RmfByTheta, CircleKeepsConstantFrame) {
  const auto field = rmf_by_theta(fixtures::unit_circle(), closed_form::kPi / 2, 512);
  for (const auto& x : field.samples()) {
    EXPECT_NEAR(x.theta, closed_form::kPi / 2, 1e-12);
    EXPECT_LE((x.u - Vec3(0, 0, 1)).norm(), 1e-12);
    EXPECT_LE((x.v - Vec3(std::cos(x.s), std::sin(x.s), 0)).norm(), 1e-12);
  }
}

TEST(RmfByTheta, MatchesClosedFormColumns) {
  for (const auto& c : cases()) {
    const auto field = rmf_by_theta(c.curve, c.theta0, 512);
    for (const auto& x : field.samples()) {
      const auto want = c.frame(x.s);
      EXPECT_LE((x.u - want.u).lpNorm<Eigen::Infinity>(), 1e-9);
      EXPECT_LE((x.v - want.v).lpNorm<Eigen::Infinity>(), 1e-9);
    }
  }
}

TEST(RmfByTheta, SamplesAreRotatedFrenetFrames) {
  for (const auto& c : cases()) {
    const auto field = rmf_by_theta(c.curve, 0.3, 256);
    for (const auto& x : field.samples()) {
      const auto f = frenet(c.curve, x.s);
      EXPECT_LE((x.u - (std::cos(x.theta) * f.normal + std::sin(x.theta) * f.binormal)).norm(), 1e-7);
      EXPECT_LE((x.v - (-std::sin(x.theta) * f.normal + std::cos(x.theta) * f.binormal)).norm(), 1e-7);
      EXPECT_LE(std::abs(x.u.dot(x.v)), 1e-9);
      EXPECT_LE(std::abs(x.tangent.dot(x.u)), 1e-9);
      EXPECT_LE((x.tangent.cross(x.u) - x.v).norm(), 1e-9);
    }
  }
}

TEST(RmfByTheta, RejectsVanishingCurvatureAndBadSpeed) {
  EXPECT_THROW(rmf_by_theta(line(), 0.0, 16), FrenetUndefined);
  EXPECT_THROW(rmf_by_theta(Curve::from_text("2*s", "0", "0", {0, 1}), 0.0, 16), PreconditionViolated);
  EXPECT_THROW(rmf_by_theta(fixtures::helix(), 0.0, 1), PreconditionViolated);
}

TEST(DoubleReflection, CircleFixesPlaneNormal) {
  const auto field = rmf_double_reflection(fixtures::unit_circle(), {0, 0, 1}, 512);
  for (const auto& x : field.samples()) {
    EXPECT_LE((x.u - Vec3(0, 0, 1)).norm(), 1e-12);
    EXPECT_NEAR(x.theta, closed_form::kPi / 2, 1e-9);
  }
}

TEST(DoubleReflection, StraightLineNeverRotates) {
  const auto field = rmf_double_reflection(line(), {0, 1, 0}, 64);
  EXPECT_FALSE(field.has_theta());
  for (const auto& x : field.samples()) {
    EXPECT_LE((x.u - Vec3(0, 1, 0)).norm(), 1e-15);
    EXPECT_LE((x.v - Vec3(0, 0, 1)).norm(), 1e-15);
    EXPECT_FALSE(x.theta_defined);
  }
  EXPECT_LE(rmf_residual(field), 1e-15);
}

TEST(DoubleReflection, HelixMatchesClosedForm) {
  const Curve h = fixtures::helix();
  const auto field = rmf_double_reflection(h, closed_form::helix(h.domain().lo).u, 2048);
  for (const auto& x : field.samples()) {
    const auto want = closed_form::helix(x.s);
    EXPECT_LE((x.u - want.u).lpNorm<Eigen::Infinity>(), 1e-6);
    EXPECT_LE((x.v - want.v).lpNorm<Eigen::Infinity>(), 1e-6);
  }
}

TEST(DoubleReflection, RejectsNonOrthogonalStart) {
  EXPECT_THROW(rmf_double_reflection(fixtures::helix(), {0.6, 0, 0.8}, 16), PreconditionViolated);
  EXPECT_THROW(rmf_double_reflection(fixtures::unit_circle(), {0, 0, 2}, 16), PreconditionViolated);
}

TEST(DoubleReflection, AgreesWithThetaIntegration) {
  for (const auto& c : cases()) {
    const auto a = rmf_by_theta(c.curve, c.theta0, 2048);
    const auto b = rmf_double_reflection(c.curve, a.samples().front().u, 2048);
    for (std::size_t i = 0; i < a.samples().size(); ++i) {
      EXPECT_LE(oracle::angle_between(a.samples()[i].u, b.samples()[i].u), 1e-5);
    }
  }
}

TEST(Residual, RotationMinimizingFramesAreSmall) {
  for (const auto& c : cases()) {
    EXPECT_LE(rmf_residual(rmf_by_theta(c.curve, c.theta0, 512)), 1e-5);
    EXPECT_LE(theta_rate_residual(rmf_by_theta(c.curve, c.theta0, 512)), 1e-6);
  }
}

TEST(Residual, FrenetFrameOfHelixIsNotRotationMinimizing) {
  const auto field = frenet_field(fixtures::helix(), 512);
  // N'.B = tau, B'.N = -tau
  EXPECT_NEAR(rmf_residual(field), 1.6, 1e-6);
  EXPECT_GE(rmf_residual(field), 0.1);
}

TEST(Residual, FrenetFrameOfPlanarCurve) {
  EXPECT_LE(rmf_residual(frenet_field(fixtures::unit_circle(), 512)), 1e-5);
}

TEST(Residual, ConvergesAtFourthOrder) {
  for (const auto& c : cases()) {
    const double coarse = rmf_residual(rmf_by_theta(c.curve, c.theta0, 256));
    const double fine = rmf_residual(rmf_by_theta(c.curve, c.theta0, 512));
    if (coarse > 1e-12) EXPECT_GE(coarse / fine, 4.0);
  }
}

TEST(Residual, NonConstantTorsion) {
  // a curve whose torsion varies: theta is no longer linear, RK4 has real work
  const Curve c = Curve::from_text("sin(s)/sqrt(2)", "cos(s)/sqrt(2)", "s/sqrt(2)", {0, 2});
  const auto f = rmf_by_theta(c, 0.1, 512);
  EXPECT_LE(rmf_residual(f), 1e-5);
}

TEST(Transport, UDerivativeIsTangential) {
  for (const auto& c : cases()) {
    const auto field = rmf_by_theta(c.curve, c.theta0, 2048);
    const auto x = field.samples();
    const double h = field.step();
    for (std::size_t i = 1; i + 1 < x.size(); i += 7) {
      const Vec3 du = (x[i + 1].u - x[i - 1].u) / (2 * h);
      const Vec3 dv = (x[i + 1].v - x[i - 1].v) / (2 * h);
      const Vec3 r2 = c.curve.derivative(x[i].s, 2);
      const Vec3 r1 = c.curve.derivative(x[i].s, 1);
      EXPECT_LE((du + x[i].u.dot(r2) * r1).norm(), 1e-4);
      EXPECT_LE((dv + x[i].v.dot(r2) * r1).norm(), 1e-4);
    }
  }
}

TEST(FrameField, InterpolatesBetweenSamples) {
  const Curve h = fixtures::helix();
  const auto field = rmf_by_theta(h, fixtures::helix_theta0(), 64);
  for (double s : {-3.1, -2.0001, -0.77, -0.01}) {
    const Frame f = field.at(s);
    const auto want = closed_form::helix(s);
    EXPECT_NEAR(f.theta, 0.8 * s, 1e-12);
    EXPECT_NEAR(f.theta_rate, 0.8, 1e-12);
    EXPECT_LE((f.u - want.u).norm(), 1e-12);
    EXPECT_LE((f.v - want.v).norm(), 1e-12);
  }
}

TEST(FrameField, ThetaIsUnwrapped) {
  // the helix turns theta through more than 2 pi over a long interval
  const Curve h = Curve::from_text("3/5*sin(s)", "3/5*cos(s)", "4/5*s", {0, 12});
  const auto field = rmf_double_reflection(h, frenet(h, 0).normal, 2048);
  ASSERT_TRUE(field.has_theta());
  EXPECT_NEAR(field.samples().back().theta, 0.8 * 12, 1e-5);
}
