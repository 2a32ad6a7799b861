#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

#include "invsq/coaxial.hpp"
#include "invsq/configuration.hpp"
#include "invsq/errors.hpp"
#include "invsq/genericity.hpp"
#include "test_support.hpp"

namespace invsq {
namespace {

using testing::random_point;

std::array<Point3, 6> tetrahedron_plus_two() {
  return {Point3(1, 1, 1), Point3(1, -1, -1), Point3(-1, 1, -1), Point3(-1, -1, 1), Point3(0.3, 1.7, 0.4),
          Point3(-1.2, 0.2, 1.9)};
}

double sphere_scale(const std::array<SphereSpec, 4>& s) {
  double m = 0.0;
  for (const auto& sp : s) {
    m = std::max({m, std::abs(sp.center.x), std::abs(sp.center.y), std::abs(sp.center.z), std::sqrt(sp.radius_sq)});
  }
  return m;
}

TEST(Configuration, KValueExample) {
  std::array<Point3, 6> a = tetrahedron_plus_two();
  a[0] = Point3(1, 0, 1);
  const Configuration cfg(a, {0, 0, 3}, {0, 0, -2});
  EXPECT_DOUBLE_EQ(k_value(cfg, Label::A), 1.0 / 5.0 + 1.0 / 10.0);
  EXPECT_DOUBLE_EQ(cfg.k(Label::A), 0.3);
}

TEST(Configuration, RejectsCoincidentPoints) {
  const auto a = tetrahedron_plus_two();
  EXPECT_THROW(Configuration(a, a[2], {0, 0, 5}), DegenerateConfiguration);
  EXPECT_THROW(Configuration(a, {0, 0, 5}, {0, 0, 5}), DegenerateConfiguration);
  auto dup = a;
  dup[4] = dup[1];
  EXPECT_THROW(Configuration(dup, {0, 0, 5}, {0, 0, 6}), DegenerateConfiguration);
  EXPECT_THROW(Configuration(a, {0, 0, 5}, {0, 0, 6}, a[0]), DegenerateConfiguration);
}

TEST(Configuration, OptionalSeventhAnchor) {
  const Configuration cfg(tetrahedron_plus_two(), {0, 0, 5}, {0, 0, -6});
  EXPECT_EQ(cfg.anchor_count(), 6);
  const Configuration ext = cfg.with_g({4, 4, 4});
  EXPECT_EQ(ext.anchor_count(), 7);
  EXPECT_DOUBLE_EQ(ext.k(Label::G), 1.0 / dist_sq({0, 0, 5}, {4, 4, 4}) + 1.0 / dist_sq({0, 0, -6}, {4, 4, 4}));
  EXPECT_FALSE(ext.without_g().has_g());
}

TEST(AnchorQuadruples, FifteenDistinctSortedQuadruples) {
  const auto& q = anchor_quadruples();
  std::set<Quadruple> seen(q.begin(), q.end());
  EXPECT_EQ(seen.size(), 15u);
  for (const auto& quad : q) EXPECT_TRUE(std::is_sorted(quad.begin(), quad.end()));
  EXPECT_EQ(q.front(), (Quadruple{Label::A, Label::B, Label::C, Label::D}));
  EXPECT_EQ(q.back(), (Quadruple{Label::C, Label::D, Label::E, Label::F}));
}

TEST(Omega, SpheresThroughOriginVanish) {
  const double w = omega({{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}, {{1, 1, 1}, 3});
  EXPECT_NEAR(w, 0.0, 1e-12);
}

TEST(Omega, SmallSpheresDoNotMeet) {
  const std::array<Point3, 4> c = {Point3(1, 0, 0), Point3(0, 1, 0), Point3(0, 0, 1), Point3(1, 1, 1)};
  const auto x = testing::radical_center(c, {0.01, 0.01, 0.01, 0.01});
  ASSERT_TRUE(x.has_value());
  const double gap = dist_sq(*x, c[0]) - 0.01;
  EXPECT_GT(std::abs(gap), 1e-3);
  const double w = omega({c[0], 0.01}, {c[1], 0.01}, {c[2], 0.01}, {c[3], 0.01});
  const double delta = coplanarity_det(c[0], c[1], c[2], c[3]);
  EXPECT_NEAR(w, 4 * delta * delta * gap, 1e-12);
  EXPECT_GT(std::abs(w), omega_tolerance(1.0));
}

TEST(Omega, CoplanarCentersReduceToSumOfSquares) {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 50; ++i) {
    std::array<Point3, 4> c;
    for (auto& p : c) p = Point3(testing::uniform(rng, -2, 2), testing::uniform(rng, -2, 2), 0.5);
    std::array<double, 4> r2{};
    for (auto& r : r2) r = testing::uniform(rng, 0.1, 4);
    const double w = omega({c[0], r2[0]}, {c[1], r2[1]}, {c[2], r2[2]}, {c[3], r2[3]});
    std::array<double, 4> lambda{};
    for (std::size_t k = 0; k < 4; ++k) lambda[k] = r2[k] - norm_sq(c[k]);
    const CramerFrame f = cramer_frame(c, lambda);
    EXPECT_EQ(f.delta, 0.0);
    EXPECT_GE(w, 0.0);
    EXPECT_NEAR(w, f.numer[0] * f.numer[0] + f.numer[1] * f.numer[1] + f.numer[2] * f.numer[2], 1e-9);
  }
}

TEST(Omega, VanishesThroughRandomCommonPoint) {
  std::mt19937_64 rng(22);
  for (int i = 0; i < 200; ++i) {
    const Point3 q = random_point(rng, 1.5);
    std::array<SphereSpec, 4> s = {SphereSpec({1, 0, 0}, 1), SphereSpec({1, 0, 0}, 1), SphereSpec({1, 0, 0}, 1),
                                   SphereSpec({1, 0, 0}, 1)};
    for (auto& sp : s) {
      const Point3 c = random_point(rng, 2);
      sp = SphereSpec(c, dist_sq(c, q));
    }
    EXPECT_LE(std::abs(omega(s[0], s[1], s[2], s[3])), omega_tolerance(sphere_scale(s)));
  }
}

TEST(Omega, TranslationInvariantAndMatchesOracle) {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 200; ++i) {
    std::array<Point3, 4> c;
    std::array<double, 4> r2{};
    for (auto& p : c) p = random_point(rng, 2);
    for (auto& r : r2) r = testing::uniform(rng, 0.2, 5);
    const Point3 t = random_point(rng, 3);
    const double w = omega({c[0], r2[0]}, {c[1], r2[1]}, {c[2], r2[2]}, {c[3], r2[3]});
    const double wt = omega({c[0] + t, r2[0]}, {c[1] + t, r2[1]}, {c[2] + t, r2[2]}, {c[3] + t, r2[3]});
    EXPECT_NEAR(wt, w, 1e-8 * (1 + std::abs(w)));
    const auto x = testing::radical_center(c, r2);
    ASSERT_TRUE(x.has_value());
    const double delta = coplanarity_det(c[0], c[1], c[2], c[3]);
    EXPECT_NEAR(w, 4 * delta * delta * (dist_sq(*x, c[0]) - r2[0]), 1e-8 * (1 + std::abs(w)));
  }
}

TEST(SphereSpec, RejectsNonPositiveRadius) {
  EXPECT_THROW(SphereSpec({0, 0, 0}, 0.0), std::invalid_argument);
  EXPECT_THROW(SphereSpec({0, 0, 0}, -1.0), std::invalid_argument);
}

TEST(CheckConditions, TetrahedronPlusTwoPassesConditionOne) {
  const Configuration cfg(tetrahedron_plus_two(), {0.2, -0.4, 0.7}, {-0.6, 0.5, -0.3});
  const auto r = check_conditions(cfg);
  for (std::size_t q = 0; q < 15; ++q) {
    const auto& quad = anchor_quadruples()[q];
    const double oracle = testing::homogeneous_det4(cfg.anchor(quad[0]), cfg.anchor(quad[1]),
                                                    cfg.anchor(quad[2]), cfg.anchor(quad[3]));
    EXPECT_NEAR(r.delta_values[q], oracle, 1e-12);
    EXPECT_GT(std::abs(oracle), r.delta_tol);
  }
  EXPECT_TRUE(r.condition_i);
  EXPECT_TRUE(r.failing_quadruples_i.empty());
}

TEST(CheckConditions, PlanarAnchorsFailEveryQuadruple) {
  const std::array<Point3, 6> a = {Point3(0, 0, 1), Point3(1, 0, 1), Point3(0, 1, 1),
                                   Point3(2, 3, 1), Point3(-1, 2, 1), Point3(3, -2, 1)};
  const auto r = check_conditions(Configuration(a, {0, 0, 3}, {0.5, 0.5, -2}));
  EXPECT_FALSE(r.condition_i);
  EXPECT_EQ(r.failing_quadruples_i.size(), 15u);
}

TEST(CheckConditions, CoaxialRealizationPassesConditionOne) {
  const Configuration cfg = realize_anchors(testing::worked_coaxial(), equilateral_phases());
  const auto r = check_conditions(cfg);
  for (std::size_t q = 0; q < 15; ++q) {
    const auto& quad = anchor_quadruples()[q];
    EXPECT_GT(std::abs(testing::homogeneous_det4(cfg.anchor(quad[0]), cfg.anchor(quad[1]), cfg.anchor(quad[2]),
                                                 cfg.anchor(quad[3]))),
              r.delta_tol);
  }
  EXPECT_TRUE(r.condition_i);
}

TEST(CheckConditions, OmegaValuesMatchRadicalCenterOracle) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    const Configuration cfg = testing::random_generic_configuration(rng);
    const auto r = check_conditions(cfg);
    for (std::size_t q = 0; q < 15; ++q) {
      const auto& quad = anchor_quadruples()[q];
      std::array<Point3, 4> c;
      std::array<double, 4> r2{};
      for (std::size_t k = 0; k < 4; ++k) {
        c[k] = cfg.anchor(quad[k]);
        r2[k] = 1.0 / cfg.k(quad[k]);
      }
      const auto x = testing::radical_center(c, r2);
      ASSERT_TRUE(x.has_value());
      const double delta = coplanarity_det(c[0], c[1], c[2], c[3]);
      const double oracle = 4 * delta * delta * (dist_sq(*x, c[0]) - r2[0]);
      EXPECT_NEAR(r.omega_values[q], oracle, 1e-8 * (1 + std::abs(oracle)));
    }
  }
}

TEST(CheckConditions, AnchorsOnAxisCircleHaveConcurrentSpheres) {
  // Anchors on the circle of radius 0.8 in z = 0 around the X*Y* axis all
  // have sphere radius^2 (0.64 + 1)/2, so their spheres share (0,0,+-sqrt(0.18)).
  std::array<Point3, 6> a;
  for (int i = 0; i < 4; ++i) {
    const double t = 0.4 + 1.3 * i;
    a[static_cast<std::size_t>(i)] = Point3(0.8 * std::cos(t), 0.8 * std::sin(t), 0.0);
  }
  a[4] = Point3(1.1, 0.7, 1.6);
  a[5] = Point3(-0.9, 1.4, -1.2);
  const Configuration cfg(a, {0, 0, 1}, {0, 0, -1});
  const Point3 common(0, 0, std::sqrt(0.18));
  for (int i = 0; i < 4; ++i) EXPECT_NEAR(dist_sq(common, a[static_cast<std::size_t>(i)]) * cfg.k(label_at(i)), 1.0, 1e-12);
  const auto r = check_conditions(cfg);
  EXPECT_FALSE(r.condition_ii);
  EXPECT_NE(std::find(r.failing_quadruples_ii.begin(), r.failing_quadruples_ii.end(), anchor_quadruples()[0]),
            r.failing_quadruples_ii.end());
}

}  // namespace
}  // namespace invsq
