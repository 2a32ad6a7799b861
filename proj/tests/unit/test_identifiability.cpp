#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "invsq/coaxial.hpp"
#include "invsq/identifiability.hpp"
#include "invsq/solver.hpp"
#include "test_support.hpp"

namespace invsq {
namespace {

double anchor_residual_oracle(const Point3& x, const Point3& y, const Point3& xs, const Point3& ys, const Point3& z) {
  return 1.0 / dist_sq(x, z) + 1.0 / dist_sq(y, z) - 1.0 / dist_sq(xs, z) - 1.0 / dist_sq(ys, z);
}

struct CoaxialFixture : ::testing::Test {
  CoaxialConfig cc = testing::worked_coaxial();
  Configuration cfg = realize_anchors(cc, equilateral_phases());
  std::vector<SolutionPair> axis_extras() const {
    std::vector<SolutionPair> out;
    for (const auto& p : enumerate_axis_solutions(cc))
      if (!p.is_trivial) out.push_back(p);
    return out;
  }
};

TEST(AnchorResidual, VanishesForTrivialPairsEverywhere) {
  std::mt19937_64 rng(71);
  const Configuration cfg = testing::random_generic_configuration(rng);
  for (int i = 0; i < 100; ++i) {
    const Point3 z = testing::random_point(rng, 5);
    EXPECT_NEAR(anchor_residual(cfg.x_star(), cfg.y_star(), cfg, z), 0.0, 1e-15);
    EXPECT_NEAR(anchor_residual(cfg.y_star(), cfg.x_star(), cfg, z), 0.0, 1e-15);
  }
}

TEST(AnchorResidual, MatchesDirectFormula) {
  std::mt19937_64 rng(72);
  const Configuration cfg = testing::random_generic_configuration(rng);
  for (int i = 0; i < 100; ++i) {
    const Point3 x = testing::random_point(rng, 2), y = testing::random_point(rng, 2), z = testing::random_point(rng, 4);
    const double oracle = anchor_residual_oracle(x, y, cfg.x_star(), cfg.y_star(), z);
    EXPECT_NEAR(anchor_residual(x, y, cfg, z), oracle, 1e-9 * (1 + std::abs(oracle)));
  }
}

TEST_F(CoaxialFixture, AxisExtrasVanishOnEveryRotatedAnchor) {
  const auto extras = axis_extras();
  ASSERT_EQ(extras.size(), 2u);
  const double rho1 = std::sqrt(cc.rho_sq(1).get_d()), rho2 = std::sqrt(cc.rho_sq(2).get_d());
  for (const auto& e : extras) {
    for (int i = 0; i < 24; ++i) {
      const double t = 2 * std::numbers::pi * i / 24.0;
      EXPECT_NEAR(anchor_residual(e.x, e.y, cfg, {rho1 * std::cos(t), rho1 * std::sin(t), cc.a3.get_d()}), 0.0, 1e-9);
      EXPECT_NEAR(anchor_residual(e.x, e.y, cfg, {rho2 * std::cos(t), rho2 * std::sin(t), cc.d3.get_d()}), 0.0, 1e-9);
    }
  }
}

TEST_F(CoaxialFixture, AxisResidualIsTheOneDimensionalOracle) {
  for (const auto& e : axis_extras()) {
    for (double g : {-7.5, -1.2, 0.4, 1.7, 6.25}) {
      const Point3 z(0, 0, g);
      const double oracle = 1 / std::pow(e.x.z - g, 2) + 1 / std::pow(e.y.z - g, 2) - 1 / std::pow(3 - g, 2) -
                            1 / std::pow(-2 - g, 2);
      EXPECT_NEAR(anchor_residual(e.x, e.y, cfg, z), oracle, 1e-12 * (1 + std::abs(oracle)));
    }
  }
}

TEST_F(CoaxialFixture, ProbeRejectsNonSolutions) {
  SolutionPair bogus{Point3(0, 0, 1.5), Point3(0, 0, -4), 0.0, false, std::nullopt};
  EXPECT_THROW(BadAnchorProbe(cfg, {bogus}), std::invalid_argument);
}

TEST_F(CoaxialFixture, EmptyProbeNeverFlags) {
  const BadAnchorProbe probe(cfg, {});
  EXPECT_TRUE(probe.empty());
  std::mt19937_64 rng(73);
  for (int i = 0; i < 50; ++i) EXPECT_FALSE(is_bad_anchor(probe, cfg, testing::random_point(rng, 4)));
  EXPECT_TRUE(sample_bad_surface(probe, cfg, GridBox{{-4, -4, -4}, {4, 4, 4}, 8}).empty());
}

TEST_F(CoaxialFixture, CirclePointsAreBadAndGenericPointsAreNot) {
  const BadAnchorProbe probe(cfg, axis_extras());
  const double rho1 = std::sqrt(cc.rho_sq(1).get_d());
  for (int i = 0; i < 10; ++i) {
    const double t = 0.1 + 0.6 * i;
    EXPECT_TRUE(is_bad_anchor(probe, cfg, {rho1 * std::cos(t), rho1 * std::sin(t), 1.0}));
  }
  for (const Point3& g : {Point3(2.3, -0.4, 2.9), Point3(-3.1, 1.7, -0.6), Point3(0.5, 0.9, 4.4)}) {
    EXPECT_FALSE(is_bad_anchor(probe, cfg, g));
  }
}

TEST_F(CoaxialFixture, SurfaceSamplesLieNearSignChanges) {
  const BadAnchorProbe probe(cfg, axis_extras());
  const GridBox box{{-4, -4, -4}, {4, 4, 4}, 12};
  const auto cloud = sample_bad_surface(probe, cfg, box);
  ASSERT_FALSE(cloud.empty());
  const double h = 8.0 / 11.0;
  for (const Point3& p : cloud) {
    EXPECT_GE(p.x, box.lo.x);
    EXPECT_LE(p.z, box.hi.z);
    // Some axis neighbour within one cell has the opposite product sign.
    auto prod = [&](const Point3& q) {
      double s = 1.0;
      for (const auto& e : probe.extras()) s *= anchor_residual_oracle(e.x, e.y, cfg.x_star(), cfg.y_star(), q);
      return s;
    };
    const double f = prod(p);
    bool change = false;
    for (const Point3& d : {Point3(h, 0, 0), Point3(0, h, 0), Point3(0, 0, h)}) {
      change = change || prod(p + d) * f <= 0 || prod(p - d) * f <= 0;
    }
    EXPECT_TRUE(change);
  }
  EXPECT_TRUE(std::is_sorted(cloud.begin(), cloud.end()));
}

TEST_F(CoaxialFixture, FarBoxWithoutSignChangeGivesEmptyCloud) {
  const BadAnchorProbe probe(cfg, axis_extras());
  const GridBox box{{40, 40, 40}, {60, 60, 60}, 6};
  // Oracle scan on a finer grid: the product keeps one sign.
  int positive = 0, negative = 0;
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 20; ++j)
      for (int k = 0; k <= 20; ++k) {
        const Point3 q(40 + i, 40 + j, 40 + k);
        double s = 1.0;
        for (const auto& e : probe.extras()) s *= anchor_residual_oracle(e.x, e.y, cfg.x_star(), cfg.y_star(), q);
        (s > 0 ? positive : negative) += 1;
      }
  ASSERT_TRUE(positive == 0 || negative == 0);
  EXPECT_TRUE(sample_bad_surface(probe, cfg, box).empty());
}

TEST_F(CoaxialFixture, GridNeedsTwoSamples) {
  const BadAnchorProbe probe(cfg, axis_extras());
  EXPECT_THROW(sample_bad_surface(probe, cfg, GridBox{{0, 0, 0}, {1, 1, 1}, 1}), std::invalid_argument);
}

TEST_F(CoaxialFixture, NontrivialDropsTrivialPair) {
  SolveOptions o;
  o.starts = 300;
  const SolveReport r = solve(cfg, o);
  const auto extras = nontrivial(r);
  EXPECT_EQ(extras.size() + 1, r.solutions.size());
  for (const auto& e : extras) EXPECT_FALSE(e.is_trivial);
}

TEST_F(CoaxialFixture, BadAnchorKeepsExtraSolutionAlive) {
  const auto extras = axis_extras();
  const double rho1 = std::sqrt(cc.rho_sq(1).get_d());
  const Point3 g(rho1 * std::cos(1.0), rho1 * std::sin(1.0), 1.0);
  const Configuration ext = cfg.with_g(g);
  for (const auto& e : extras) EXPECT_LT(residual_norm(ext, e.x, e.y, true), 1e-9);
}

}  // namespace
}  // namespace invsq
