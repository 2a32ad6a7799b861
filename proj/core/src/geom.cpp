#include "invsq/geom.hpp"

#include <algorithm>
#include <stdexcept>

namespace invsq {

Point3::Point3(double x_, double y_, double z_) : x(x_), y(y_), z(z_) {
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z)) {
    throw std::invalid_argument("Point3: coordinates must be finite");
  }
}

Point3 cross(const Point3& a, const Point3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

double norm_sq(const Point3& p) { return dot(p, p); }

double dist_sq(const Point3& p, const Point3& q) {
  const double dx = p.x - q.x;
  const double dy = p.y - q.y;
  const double dz = p.z - q.z;
  return dx * dx + dy * dy + dz * dz;
}

Point3 midpoint(const Point3& p, const Point3& q) { return 0.5 * (p + q); }

double det3(const Point3& r0, const Point3& r1, const Point3& r2) { return dot(r0, cross(r1, r2)); }

double coplanarity_det(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  return det3(a - b, a - c, a - d);
}

double coordinate_scale(std::span<const Point3> points) {
  double s = 0.0;
  for (const auto& p : points) {
    s = std::max({s, std::abs(p.x), std::abs(p.y), std::abs(p.z)});
  }
  return s;
}

double coordinate_scale(std::initializer_list<Point3> points) {
  return coordinate_scale(std::span<const Point3>(points.begin(), points.size()));
}

bool coplanar(const Point3& a, const Point3& b, const Point3& c, const Point3& d) {
  const double s = coordinate_scale({a, b, c, d});
  return std::abs(coplanarity_det(a, b, c, d)) <= kCoplanarRelTol * s * s * s;
}

bool collinear(const Point3& a, const Point3& b, const Point3& c) {
  const double s = coordinate_scale({a, b, c});
  const double tol = kCoplanarRelTol * s * s;
  const Point3 m = cross(a - b, a - c);
  return std::abs(m.x) <= tol && std::abs(m.y) <= tol && std::abs(m.z) <= tol;
}

}  // namespace invsq
