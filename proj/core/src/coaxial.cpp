#include "invsq/coaxial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>

#include "invsq/errors.hpp"

namespace invsq {

CoaxialConfig::CoaxialConfig(Rat r1_, Rat r2_, Rat a3_, Rat d3_, Rat u_, Rat v_)
    : r1(std::move(r1_)), r2(std::move(r2_)), a3(std::move(a3_)), d3(std::move(d3_)),
      u(std::move(u_)), v(std::move(v_)) {
  if (!(rho_sq(1) > 0)) throw DegenerateConfiguration("first circle has no positive radius: need r1^2 > a3^2");
  if (!(rho_sq(2) > 0)) throw DegenerateConfiguration("second circle has no positive radius: need r2^2 > d3^2");
  if (u == v) throw DegenerateConfiguration("X* and Y* coincide (u == v)");
}

Rat CoaxialConfig::rho_sq(int which) const {
  const Rat h = height(which);
  return radius_sq(which) - h * h;
}

Rat axis_dist_sq(const CoaxialConfig& cc, int which, const Rat& t) {
  return cc.radius_sq(which) - 2 * cc.height(which) * t + t * t;
}

RatPoly axis_dist_sq_poly(const CoaxialConfig& cc, int which) {
  return RatPoly({cc.radius_sq(which), Rat(-2 * cc.height(which)), Rat(1)});
}

Rat kappa(const CoaxialConfig& cc, int which) {
  const Rat su = axis_dist_sq(cc, which, cc.u);
  const Rat sv = axis_dist_sq(cc, which, cc.v);
  if (su == 0 || sv == 0) {
    throw DegenerateConfiguration("kappa_" + std::to_string(which) + ": zero denominator");
  }
  return Rat(1 / su + 1 / sv);
}

OmegaCoefficients abc_coeffs(const CoaxialConfig& cc) {
  auto build = [&](int which, RatPoly& alpha, RatPoly& beta, RatPoly& gamma) {
    const RatPoly s = axis_dist_sq_poly(cc, which);
    alpha = RatPoly::constant(Rat(1)) - s * kappa(cc, which);
    beta = alpha * Rat(-2 * cc.height(which));
    gamma = s + alpha * cc.radius_sq(which);
  };
  OmegaCoefficients c;
  build(1, c.alpha1, c.beta1, c.gamma1);
  build(2, c.alpha2, c.beta2, c.gamma2);
  return c;
}

RationalU rational_u_of_v(const CoaxialConfig& cc) {
  const auto c = abc_coeffs(cc);
  return {c.gamma2 * c.alpha1 - c.gamma1 * c.alpha2, c.beta1 * c.alpha2 - c.beta2 * c.alpha1};
}

RatPoly w_polynomial(const CoaxialConfig& cc) {
  const auto c = abc_coeffs(cc);
  const RationalU r = rational_u_of_v(cc);
  if (r.denom.is_zero()) {
    throw DegenerateConfiguration("U cannot be eliminated linearly: both circles lie on one plane");
  }
  const RatPoly full = c.alpha1 * r.numer * r.numer + c.beta1 * r.numer * r.denom + c.gamma1 * r.denom * r.denom;
  return exact_divide(full, c.alpha1);
}

Rat w_leading_closed_form(const CoaxialConfig& cc) {
  const Rat k1 = kappa(cc, 1);
  const Rat k2 = kappa(cc, 2);
  const Rat r1s = cc.radius_sq(1);
  const Rat r2s = cc.radius_sq(2);
  const Rat& a3 = cc.a3;
  const Rat& d3 = cc.d3;
  const Rat inner = a3 * a3 * (4 * r2s * k1 * k2 - 4 * k1) + d3 * d3 * (4 * r1s * k1 * k2 - 4 * k2) +
                    4 * a3 * d3 * (-k1 * k2 * (r1s + r2s) + k1 + k2);
  const Rat sq = k1 * k2 * (r1s - r2s) + k1 - k2;
  return Rat(k1 * k2 * inner + sq * sq);
}

RatPoly axis_resultant(const CoaxialConfig& cc) {
  const auto c = abc_coeffs(cc);
  const RatPoly ag = c.alpha1 * c.gamma2 - c.alpha2 * c.gamma1;
  const RatPoly ab = c.alpha1 * c.beta2 - c.alpha2 * c.beta1;
  const RatPoly bg = c.beta1 * c.gamma2 - c.beta2 * c.gamma1;
  return ag * ag - ab * bg;
}

std::array<Rat, 2> axis_equations(const CoaxialConfig& cc, const Rat& U, const Rat& V) {
  std::array<Rat, 2> out;
  for (int i = 1; i <= 2; ++i) {
    const Rat su = axis_dist_sq(cc, i, U);
    const Rat sv = axis_dist_sq(cc, i, V);
    out[static_cast<std::size_t>(i - 1)] = 1 / su + 1 / sv - kappa(cc, i);
  }
  return out;
}

namespace {

// Real roots of omega_1(U) = 0 at the given V, rounded to rationals.
std::vector<Rat> quadratic_u_candidates(const OmegaCoefficients& c, const Rat& V) {
  const double a = c.alpha1.eval(V).get_d();
  const double b = c.beta1.eval(V).get_d();
  const double g = c.gamma1.eval(V).get_d();
  std::vector<Rat> out;
  if (a == 0.0) {
    if (b != 0.0) out.emplace_back(-g / b);
    return out;
  }
  const double disc = b * b - 4 * a * g;
  if (disc < 0.0) return out;
  const double sq = std::sqrt(disc);
  // Stable pair of roots.
  const double q = -0.5 * (b + std::copysign(sq, b));
  out.emplace_back(q / a);
  if (q != 0.0) out.emplace_back(g / q);
  return out;
}

}  // namespace

std::vector<SolutionPair> enumerate_axis_solutions(const CoaxialConfig& cc, const Rat& precision) {
  const auto coeffs = abc_coeffs(cc);
  const RationalU ru = rational_u_of_v(cc);
  const bool linear = !ru.denom.is_zero();
  const RatPoly eliminant = linear ? w_polynomial(cc) : axis_resultant(cc);
  if (eliminant.is_zero()) {
    throw DegenerateConfiguration("axis system has a continuum of solutions");
  }

  std::vector<SolutionPair> found;
  const double scale = std::max({std::abs(cc.u.get_d()), std::abs(cc.v.get_d()), std::abs(cc.r1.get_d()),
                                 std::abs(cc.r2.get_d())});
  for (const auto& root : real_roots(eliminant, precision)) {
    const Rat V = (root.lo + root.hi) / 2;
    std::vector<Rat> us;
    const Rat dv = linear ? ru.denom.eval(V) : Rat(0);
    if (linear && dv != 0) {
      us.emplace_back(ru.numer.eval(V) / dv);
    } else {
      us = quadratic_u_candidates(coeffs, V);
    }
    for (const Rat& U : us) {
      if (axis_dist_sq(cc, 1, U) == 0 || axis_dist_sq(cc, 2, U) == 0) continue;
      const auto eq = axis_equations(cc, U, V);
      const double err = std::max(std::abs(eq[0].get_d()), std::abs(eq[1].get_d()));
      if (!(err <= kAxisEquationTol)) continue;
      SolutionPair s;
      s.x = Point3(0.0, 0.0, U.get_d());
      s.y = Point3(0.0, 0.0, V.get_d());
      s.residual_norm = err;
      s = canonical(s);
      bool dup = false;
      for (const auto& f : found) {
        if (pair_distance_mod_swap(f.x, f.y, s.x, s.y) <= 1e-9 * scale) dup = true;
      }
      if (!dup) found.push_back(s);
    }
  }
  const Point3 xs(0.0, 0.0, cc.u.get_d());
  const Point3 ys(0.0, 0.0, cc.v.get_d());
  for (auto& s : found) s.is_trivial = pair_distance_mod_swap(s.x, s.y, xs, ys) <= 1e-9 * scale;
  std::sort(found.begin(), found.end(), [](const SolutionPair& a, const SolutionPair& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  });
  return found;
}

std::vector<SolutionPair> enumerate_axis_solutions(const CoaxialConfig& cc) {
  mpz_class den;
  mpz_ui_pow_ui(den.get_mpz_t(), 10, 30);
  return enumerate_axis_solutions(cc, Rat(mpz_class(1), den));
}

Configuration realize_anchors(const CoaxialConfig& cc, const std::array<double, 6>& phases) {
  const double two_pi = 2.0 * std::numbers::pi;
  for (int c = 0; c < 2; ++c) {
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        const double d = std::remainder(phases[static_cast<std::size_t>(3 * c + i)] -
                                            phases[static_cast<std::size_t>(3 * c + j)],
                                        two_pi);
        if (std::abs(d) < 1e-12) throw DegenerateConfiguration("repeated phase on circle " + std::to_string(c + 1));
      }
    }
  }
  std::array<Point3, 6> anchors;
  for (int i = 0; i < 6; ++i) {
    const int which = i < 3 ? 1 : 2;
    const double rho = std::sqrt(cc.rho_sq(which).get_d());
    const double t = phases[static_cast<std::size_t>(i)];
    anchors[static_cast<std::size_t>(i)] = Point3(rho * std::cos(t), rho * std::sin(t), cc.height(which).get_d());
  }
  return Configuration(anchors, Point3(0.0, 0.0, cc.u.get_d()), Point3(0.0, 0.0, cc.v.get_d()));
}

std::array<double, 6> equilateral_phases(double second_offset) {
  const double third = 2.0 * std::numbers::pi / 3.0;
  return {0.0, third, 2.0 * third, second_offset, second_offset + third, second_offset + 2.0 * third};
}

}  // namespace invsq
