#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "invsq/geom.hpp"
#include "test_support.hpp"

namespace invsq {
namespace {

using testing::cofactor_det3;
using testing::random_point;

TEST(Point3, RejectsNonFiniteCoordinates) {
  EXPECT_THROW(Point3(std::numeric_limits<double>::quiet_NaN(), 0, 0), std::invalid_argument);
  EXPECT_THROW(Point3(0, std::numeric_limits<double>::infinity(), 0), std::invalid_argument);
  EXPECT_NO_THROW(Point3(1e300, -1e300, 0));
}

TEST(Point3, OrdersLexicographically) {
  EXPECT_LT(Point3(0, 5, 5), Point3(1, 0, 0));
  EXPECT_LT(Point3(1, 0, 9), Point3(1, 1, 0));
  EXPECT_LT(Point3(1, 1, 0), Point3(1, 1, 1));
  EXPECT_EQ(Point3(1, 2, 3), Point3(1, 2, 3));
}

TEST(NormSq, Examples) {
  EXPECT_EQ(norm_sq({0, 0, 0}), 0.0);
  EXPECT_EQ(norm_sq({1, 0, 1}), 2.0);
  EXPECT_EQ(norm_sq({3, -2, 6}), 9.0 + 4.0 + 36.0);
}

TEST(DistSq, Examples) {
  const Point3 p(0.25, -7, 3);
  EXPECT_EQ(dist_sq(p, p), 0.0);
  EXPECT_EQ(dist_sq({0, 0, 3}, {1, 0, 1}), 5.0);
  EXPECT_EQ(dist_sq({0, 0, -2}, {1, 0, 1}), 10.0);
}

TEST(DistSq, SymmetricAndTranslationInvariant) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const Point3 p = random_point(rng, 5), q = random_point(rng, 5), t = random_point(rng, 5);
    EXPECT_EQ(dist_sq(p, q), dist_sq(q, p));
    EXPECT_NEAR(dist_sq(p + t, q + t), dist_sq(p, q), 1e-12 * (1 + dist_sq(p, q)));
  }
}

TEST(CoplanarityDet, UnitFrame) { EXPECT_EQ(coplanarity_det({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}), -1.0); }

TEST(CoplanarityDet, EqualHeightsGiveZero) {
  EXPECT_EQ(coplanarity_det({1, 2, 4}, {-3, 0.5, 4}, {7, -1, 4}, {0, 0, 4}), 0.0);
}

TEST(CoplanarityDet, MatchesCofactorExpansion) {
  const Point3 a(1, 2, 3), b(2, 0, 1), c(0, 1, 4), d(3, 3, 0);
  const auto ab = a - b, ac = a - c, ad = a - d;
  const double oracle = cofactor_det3({{{ab.x, ab.y, ab.z}, {ac.x, ac.y, ac.z}, {ad.x, ad.y, ad.z}}});
  EXPECT_EQ(oracle, -2.0);
  EXPECT_EQ(coplanarity_det(a, b, c, d), oracle);
}

TEST(CoplanarityDet, AgreesWithHomogeneousDeterminant) {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    const Point3 a = random_point(rng, 3), b = random_point(rng, 3), c = random_point(rng, 3),
                 d = random_point(rng, 3);
    EXPECT_NEAR(coplanarity_det(a, b, c, d), testing::homogeneous_det4(a, b, c, d), 1e-10);
  }
}

TEST(CoplanarityDet, AntisymmetricUnderSwapsAndTranslationInvariant) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const Point3 a = random_point(rng, 3), b = random_point(rng, 3), c = random_point(rng, 3),
                 d = random_point(rng, 3), t = random_point(rng, 10);
    const double base = coplanarity_det(a, b, c, d);
    const double tol = 1e-10 * (1 + std::abs(base));
    EXPECT_NEAR(coplanarity_det(b, a, c, d), -base, tol);
    EXPECT_NEAR(coplanarity_det(a, c, b, d), -base, tol);
    EXPECT_NEAR(coplanarity_det(a, b, d, c), -base, tol);
    EXPECT_NEAR(coplanarity_det(d, b, c, a), -base, tol);
    EXPECT_NEAR(coplanarity_det(a + t, b + t, c + t, d + t), base, 1e-9);
  }
}

TEST(Collinear, Examples) {
  EXPECT_TRUE(collinear({0, 0, 0}, {1, 1, 1}, {2, 2, 2}));
  EXPECT_FALSE(collinear({0, 0, 0}, {1, 0, 0}, {0, 1, 0}));
  const Point3 a(1, 2, 3), b(3, 6, 9), c(-1, -2, -3);
  const Point3 u = b - a, v = c - a;
  const double cross_norm_sq = std::pow(u.y * v.z - u.z * v.y, 2) + std::pow(u.z * v.x - u.x * v.z, 2) +
                               std::pow(u.x * v.y - u.y * v.x, 2);
  EXPECT_EQ(cross_norm_sq, 0.0);
  EXPECT_TRUE(collinear(a, b, c));
}

TEST(Coplanar, DetectsPlanarAndSpatialQuadruples) {
  EXPECT_TRUE(coplanar({1, 2, 4}, {-3, 0.5, 4}, {7, -1, 4}, {0, 0, 4}));
  EXPECT_FALSE(coplanar({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}));
  EXPECT_TRUE(coplanar({0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, 1e-12}));
}

TEST(Midpoint, AveragesCoordinates) { EXPECT_EQ(midpoint({0, 2, -4}, {2, 0, 4}), Point3(1, 1, 0)); }

}  // namespace
}  // namespace invsq
