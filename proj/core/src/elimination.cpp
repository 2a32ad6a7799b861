#include "invsq/elimination.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "invsq/errors.hpp"

namespace invsq {

double gamma(const Configuration& cfg, Label l, const Point3& y) {
  const Point3& t = cfg.anchor(l);
  const double d = dist_sq(y, t);
  const double den = cfg.k(l) * d - 1.0;
  if (std::abs(den) <= kGammaDenomEps) {
    throw SingularLocus("Gamma_" + std::string(label_name(l)) + " undefined: y on k_T|y-T|^2 = 1");
  }
  return d / den - norm_sq(t);
}

GammaVector gamma_vector(const Configuration& cfg, const Point3& y) {
  GammaVector g;
  g.values.reserve(static_cast<std::size_t>(cfg.anchor_count()));
  for (int i = 0; i < cfg.anchor_count(); ++i) g.values.push_back(gamma(cfg, label_at(i), y));
  return g;
}

namespace {

std::array<Point3, 4> frame_points(const Configuration& cfg, const Quadruple& q) {
  return {cfg.anchor(q[0]), cfg.anchor(q[1]), cfg.anchor(q[2]), cfg.anchor(q[3])};
}

std::array<double, 4> frame_gammas(const Configuration& cfg, const Quadruple& q, const Point3& y) {
  return {gamma(cfg, q[0], y), gamma(cfg, q[1], y), gamma(cfg, q[2], y), gamma(cfg, q[3], y)};
}

std::string quad_name(const Quadruple& q) {
  std::string s;
  for (Label l : q) s += label_name(l);
  return s;
}

void require_non_coplanar(const std::array<Point3, 4>& p, const Quadruple& q) {
  const double s = coordinate_scale(p);
  if (std::abs(coplanarity_det(p[0], p[1], p[2], p[3])) <= delta_tolerance(s)) {
    throw CoplanarFrame("anchors " + quad_name(q) + " are coplanar");
  }
}

}  // namespace

Point3 recover_x(const Configuration& cfg, const Point3& y, const Quadruple& frame) {
  const auto pts = frame_points(cfg, frame);
  require_non_coplanar(pts, frame);
  const CramerFrame f = cramer_frame(pts, frame_gammas(cfg, frame, y));
  const double inv = 1.0 / (2.0 * f.delta);
  return {f.numer[0] * inv, f.numer[1] * inv, f.numer[2] * inv};
}

const std::array<LabelPair, 15>& omitted_pairs() {
  static const std::array<LabelPair, 15> pairs = [] {
    std::array<LabelPair, 15> out{};
    std::size_t n = 0;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b) out[n++] = {label_at(a), label_at(b)};
    return out;
  }();
  return pairs;
}

Quadruple kept_quadruple(const LabelPair& omitted) {
  Quadruple q{};
  std::size_t n = 0;
  for (Label l : kSixLabels) {
    if (l != omitted[0] && l != omitted[1]) q[n++] = l;
  }
  return q;
}

double phi(const Configuration& cfg, Label omitted, const Point3& y) {
  Eigen::Matrix<double, 5, 5> m;
  int col = 0;
  for (Label l : kSixLabels) {
    if (l == omitted) continue;
    const Point3& t = cfg.anchor(l);
    m(0, col) = gamma(cfg, l, y);
    m(1, col) = t.x;
    m(2, col) = t.y;
    m(3, col) = t.z;
    m(4, col) = 1.0;
    ++col;
  }
  return m.partialPivLu().determinant();
}

double psi(const Configuration& cfg, const LabelPair& omitted, const Point3& y) {
  const Quadruple q = kept_quadruple(omitted);
  const auto pts = frame_points(cfg, q);
  require_non_coplanar(pts, q);
  return cleared_first_sphere_residual(pts, frame_gammas(cfg, q, y));
}

}  // namespace invsq
