#pragma once

#include <array>
#include <vector>

#include "invsq/configuration.hpp"
#include "invsq/geom.hpp"

namespace invsq {

using Quadruple = std::array<Label, 4>;

// The fifteen 4-subsets of {A..F} in natural alphabetic order (ABCD, ABCE, ..., CDEF).
const std::array<Quadruple, 15>& anchor_quadruples();

struct SphereSpec {
  Point3 center;
  double radius_sq;

  // Throws std::invalid_argument unless radius_sq > 0 and finite.
  SphereSpec(const Point3& c, double r2);
};

// Four sphere equations |X|^2 - 2 X.P_i = lambda_i share the linear part
// 2 (P_1 - P_i).X = lambda_i - lambda_1 (i = 2,3,4). Solving it by Cramer's
// rule (x_j = N_j / 2Delta) and substituting into the first sphere gives
//
//   sum_j (N_j - 2 Delta p_1j)^2 - 4 Delta^2 (lambda_1 + |P_1|^2),
//
// which is 4 Delta^2 times the residual of the first sphere at the Cramer
// point. Psi uses lambda = Gamma, Omega uses lambda = r^2 - |P|^2.
struct CramerFrame {
  double delta;                  // coplanarity_det(P_1, P_2, P_3, P_4)
  std::array<double, 3> numer;   // N_1, N_2, N_3
};

CramerFrame cramer_frame(const std::array<Point3, 4>& centers, const std::array<double, 4>& lambda);
double cleared_first_sphere_residual(const std::array<Point3, 4>& centers,
                                     const std::array<double, 4>& lambda);

// Omega(P_1..P_4, r_1^2..r_4^2). Zero iff (for Delta != 0) the four spheres
// share a real or complex point. With coplanar centers only the three
// squared numerators remain.
double omega(const SphereSpec& s1, const SphereSpec& s2, const SphereSpec& s3, const SphereSpec& s4);

inline constexpr double kOmegaRelTol = 1e-7;

// Thresholds below which Delta and Omega count as vanishing.
double delta_tolerance(double scale);  // 1e-9 * scale^3
double omega_tolerance(double scale);  // 1e-7 * scale^6

// Sphere of center T and radius^2 = 1/k_T.
SphereSpec anchor_sphere(const Configuration& cfg, Label l);

struct GenericityReport {
  bool condition_i = false;   // no four anchors coplanar
  bool condition_ii = false;  // no four anchor spheres concurrent (real or complex)
  std::vector<Quadruple> failing_quadruples_i;
  std::vector<Quadruple> failing_quadruples_ii;
  std::array<double, 15> delta_values{};  // aligned with anchor_quadruples()
  std::array<double, 15> omega_values{};
  double delta_tol = 0.0;
  double omega_tol = 0.0;
};

GenericityReport check_conditions(const Configuration& cfg);

}  // namespace invsq
