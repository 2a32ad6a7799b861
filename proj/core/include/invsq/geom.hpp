#pragma once

#include <array>
#include <cmath>
#include <compare>
#include <initializer_list>
#include <span>

namespace invsq {

// A point of E^3, identified with its position vector. Coordinates are
// always finite; construction rejects NaN and infinities.
struct Point3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Point3() = default;
  Point3(double x_, double y_, double z_);

  double operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }

  friend Point3 operator+(const Point3& a, const Point3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Point3 operator-(const Point3& a, const Point3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Point3 operator*(double s, const Point3& a) { return {s * a.x, s * a.y, s * a.z}; }
  friend Point3 operator*(const Point3& a, double s) { return s * a; }

  friend bool operator==(const Point3&, const Point3&) = default;
  // Lexicographic on (x, y, z).
  friend std::partial_ordering operator<=>(const Point3&, const Point3&) = default;
};

inline double dot(const Point3& a, const Point3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
Point3 cross(const Point3& a, const Point3& b);

double norm_sq(const Point3& p);
double dist_sq(const Point3& p, const Point3& q);
Point3 midpoint(const Point3& p, const Point3& q);

// det of the 3x3 matrix with rows r0, r1, r2.
double det3(const Point3& r0, const Point3& r1, const Point3& r2);

// Delta(a,b,c,d): det of rows (a-b, a-c, a-d). Zero iff the points are coplanar.
double coplanarity_det(const Point3& a, const Point3& b, const Point3& c, const Point3& d);

// Largest absolute coordinate among the points; the length unit used by
// every relative tolerance in the library.
double coordinate_scale(std::span<const Point3> points);
double coordinate_scale(std::initializer_list<Point3> points);

// |Delta| <= 1e-9 * scale^3.
inline constexpr double kCoplanarRelTol = 1e-9;
bool coplanar(const Point3& a, const Point3& b, const Point3& c, const Point3& d);

// All three 2x2 minors of the rows (a-b, a-c) vanish within
// kCoplanarRelTol * scale^2.
bool collinear(const Point3& a, const Point3& b, const Point3& c);

}  // namespace invsq
