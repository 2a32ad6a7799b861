#pragma once

#include <array>
#include <numbers>
#include <utility>
#include <vector>

#include "invsq/configuration.hpp"
#include "invsq/rat_poly.hpp"
#include "invsq/solver.hpp"

namespace invsq {

// Two circles on the planes z = a3 and z = d3, centered on the z axis, with
// X* = (0,0,u) and Y* = (0,0,v) on the axis. r_i is the distance from the
// origin to any point of circle i, so rho_i^2 = r_i^2 - h_i^2 (h_1 = a3, h_2 = d3).
struct CoaxialConfig {
  Rat r1, r2, a3, d3, u, v;

  // Throws DegenerateConfiguration unless r1^2 > a3^2, r2^2 > d3^2 and u != v.
  CoaxialConfig(Rat r1_, Rat r2_, Rat a3_, Rat d3_, Rat u_, Rat v_);

  Rat rho_sq(int which) const;
  Rat height(int which) const { return which == 1 ? a3 : d3; }
  Rat radius_sq(int which) const { return which == 1 ? Rat(r1 * r1) : Rat(r2 * r2); }
};

// S_i(t) = r_i^2 - 2 h_i t + t^2, the squared distance from (0,0,t) to circle i.
Rat axis_dist_sq(const CoaxialConfig& cc, int which, const Rat& t);
RatPoly axis_dist_sq_poly(const CoaxialConfig& cc, int which);

// kappa_i = 1/S_i(u) + 1/S_i(v). Throws DegenerateConfiguration on a zero denominator.
Rat kappa(const CoaxialConfig& cc, int which);

// omega_i(U) = alpha_i U^2 + beta_i U + gamma_i, coefficients polynomial in V:
// alpha_i = 1 - kappa_i S_i(V), beta_i = -2 h_i alpha_i, gamma_i = S_i(V) + r_i^2 alpha_i.
struct OmegaCoefficients {
  RatPoly alpha1, beta1, gamma1;
  RatPoly alpha2, beta2, gamma2;
};
OmegaCoefficients abc_coeffs(const CoaxialConfig& cc);

// U = numer(V) / denom(V) with numer = gamma2 alpha1 - gamma1 alpha2 and
// denom = beta1 alpha2 - beta2 alpha1.
struct RationalU {
  RatPoly numer;
  RatPoly denom;
};
RationalU rational_u_of_v(const CoaxialConfig& cc);

// Numerator of omega_1(r(V)) after cancelling alpha_1, which divides both
// alpha1 N^2 + beta1 N D + gamma1 D^2 and D^2. Degree <= 8.
// Throws DegenerateConfiguration when D vanishes identically (a3 == d3).
RatPoly w_polynomial(const CoaxialConfig& cc);

// Closed form of the V^8 coefficient of w_polynomial:
// k1 k2 (a3^2 (4 r2^2 k1 k2 - 4 k1) + d3^2 (4 r1^2 k1 k2 - 4 k2)
//        + 4 a3 d3 (-k1 k2 (r1^2 + r2^2) + k1 + k2)) + (k1 k2 (r1^2 - r2^2) + k1 - k2)^2.
Rat w_leading_closed_form(const CoaxialConfig& cc);

// Res_U(omega_1, omega_2) as a polynomial in V; used when D vanishes identically.
RatPoly axis_resultant(const CoaxialConfig& cc);

// The two axis equations 1/S_i(U) + 1/S_i(V) - kappa_i, exactly.
std::array<Rat, 2> axis_equations(const CoaxialConfig& cc, const Rat& U, const Rat& V);

inline constexpr double kAxisEquationTol = 1e-10;

// Canonical, deduplicated axis solutions X = (0,0,U), Y = (0,0,V) from the
// real roots of w (or of the resultant when a3 == d3). residual_norm holds
// the larger absolute axis equation. Sorted lexicographically.
std::vector<SolutionPair> enumerate_axis_solutions(const CoaxialConfig& cc, const Rat& precision);
// precision 1e-30
std::vector<SolutionPair> enumerate_axis_solutions(const CoaxialConfig& cc);

// Anchors (rho_1 cos t, rho_1 sin t, a3) for phases[0..2] and
// (rho_2 cos t, rho_2 sin t, d3) for phases[3..5]; X* = (0,0,u), Y* = (0,0,v).
// Throws DegenerateConfiguration if phases repeat (mod 2 pi) on a circle.
Configuration realize_anchors(const CoaxialConfig& cc, const std::array<double, 6>& phases);

// Phases 0, 120, 240 degrees on the first circle and the same triangle
// turned by `second_offset` on the second. With offset 0 (or any multiple of
// 60 degrees) a chord of one triangle is parallel to a chord of the other,
// making those four anchors coplanar.
std::array<double, 6> equilateral_phases(double second_offset = std::numbers::pi / 6.0);

}  // namespace invsq
