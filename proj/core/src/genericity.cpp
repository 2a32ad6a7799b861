#include "invsq/genericity.hpp"

#include <cmath>
#include <stdexcept>

namespace invsq {

const std::array<Quadruple, 15>& anchor_quadruples() {
  static const std::array<Quadruple, 15> quads = [] {
    std::array<Quadruple, 15> out{};
    std::size_t n = 0;
    for (int a = 0; a < 6; ++a)
      for (int b = a + 1; b < 6; ++b)
        for (int c = b + 1; c < 6; ++c)
          for (int d = c + 1; d < 6; ++d)
            out[n++] = {label_at(a), label_at(b), label_at(c), label_at(d)};
    return out;
  }();
  return quads;
}

SphereSpec::SphereSpec(const Point3& c, double r2) : center(c), radius_sq(r2) {
  if (!(r2 > 0.0) || !std::isfinite(r2)) {
    throw std::invalid_argument("SphereSpec: radius_sq must be positive and finite");
  }
}

CramerFrame cramer_frame(const std::array<Point3, 4>& p, const std::array<double, 4>& lambda) {
  const Point3 m0 = p[0] - p[1];
  const Point3 m1 = p[0] - p[2];
  const Point3 m2 = p[0] - p[3];
  const double b0 = lambda[1] - lambda[0];
  const double b1 = lambda[2] - lambda[0];
  const double b2 = lambda[3] - lambda[0];

  CramerFrame f{};
  f.delta = det3(m0, m1, m2);
  // Column j replaced by b.
  f.numer[0] = det3({b0, m0.y, m0.z}, {b1, m1.y, m1.z}, {b2, m2.y, m2.z});
  f.numer[1] = det3({m0.x, b0, m0.z}, {m1.x, b1, m1.z}, {m2.x, b2, m2.z});
  f.numer[2] = det3({m0.x, m0.y, b0}, {m1.x, m1.y, b1}, {m2.x, m2.y, b2});
  return f;
}

double cleared_first_sphere_residual(const std::array<Point3, 4>& p,
                                     const std::array<double, 4>& lambda) {
  const CramerFrame f = cramer_frame(p, lambda);
  double sum = 0.0;
  for (int j = 0; j < 3; ++j) {
    const double t = f.numer[static_cast<std::size_t>(j)] - 2.0 * f.delta * p[0][j];
    sum += t * t;
  }
  return sum - 4.0 * f.delta * f.delta * (lambda[0] + norm_sq(p[0]));
}

double omega(const SphereSpec& s1, const SphereSpec& s2, const SphereSpec& s3, const SphereSpec& s4) {
  const std::array<Point3, 4> centers = {s1.center, s2.center, s3.center, s4.center};
  std::array<double, 4> lambda{};
  const std::array<const SphereSpec*, 4> s = {&s1, &s2, &s3, &s4};
  for (std::size_t i = 0; i < 4; ++i) lambda[i] = s[i]->radius_sq - norm_sq(s[i]->center);
  return cleared_first_sphere_residual(centers, lambda);
}

double delta_tolerance(double scale) { return kCoplanarRelTol * scale * scale * scale; }

double omega_tolerance(double scale) {
  const double s3 = scale * scale * scale;
  return kOmegaRelTol * s3 * s3;
}

SphereSpec anchor_sphere(const Configuration& cfg, Label l) {
  return SphereSpec(cfg.anchor(l), 1.0 / cfg.k(l));
}

GenericityReport check_conditions(const Configuration& cfg) {
  GenericityReport r;
  const double scale = cfg.scale();
  r.delta_tol = delta_tolerance(scale);
  r.omega_tol = omega_tolerance(scale);

  const auto& quads = anchor_quadruples();
  for (std::size_t q = 0; q < quads.size(); ++q) {
    const auto& [a, b, c, d] = quads[q];
    r.delta_values[q] = coplanarity_det(cfg.anchor(a), cfg.anchor(b), cfg.anchor(c), cfg.anchor(d));
    r.omega_values[q] = omega(anchor_sphere(cfg, a), anchor_sphere(cfg, b), anchor_sphere(cfg, c),
                              anchor_sphere(cfg, d));
    if (std::abs(r.delta_values[q]) <= r.delta_tol) r.failing_quadruples_i.push_back(quads[q]);
    if (std::abs(r.omega_values[q]) <= r.omega_tol) r.failing_quadruples_ii.push_back(quads[q]);
  }
  r.condition_i = r.failing_quadruples_i.empty();
  r.condition_ii = r.failing_quadruples_ii.empty();
  return r;
}

}  // namespace invsq
