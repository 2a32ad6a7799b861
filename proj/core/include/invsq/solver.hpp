#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "invsq/configuration.hpp"
#include "invsq/geom.hpp"

namespace invsq {

// Residual of the inverse-square system at (x, y): component T is
// 1/|x-T|^2 + 1/|y-T|^2 - k_T, for A..F and G when include_g is set.
// Throws EvaluationError if x or y coincides with a used anchor.
std::vector<double> residual(const Configuration& cfg, const Point3& x, const Point3& y,
                             bool include_g = false);
double residual_norm(const Configuration& cfg, const Point3& x, const Point3& y,
                     bool include_g = false);

// Phi_A..Phi_F and Psi_AB..Psi_EF at y. Entries are empty where the value is
// undefined (coplanar frame for Psi, y on a Gamma singular sphere).
struct Certificates {
  std::array<std::optional<double>, 6> phi;
  std::array<std::optional<double>, 15> psi;
};
Certificates certificates_at(const Configuration& cfg, const Point3& y);

struct SolutionPair {
  Point3 x;
  Point3 y;
  double residual_norm = 0.0;
  bool is_trivial = false;
  std::optional<Certificates> certificates;
};

struct SolveOptions {
  int starts = 2000;
  std::uint64_t seed = 1;
  double newton_tol = 1e-13;  // relative step-size stop
  double accept_tol = 1e-9;   // residual norm for acceptance
  int max_iter = 80;
  std::optional<double> box_radius;  // default: the anchor diameter
  bool force = false;                // skip the genericity precondition
  unsigned threads = 0;              // 0: hardware concurrency
};

struct SolveReport {
  std::vector<SolutionPair> solutions;  // canonical, sorted lexicographically
  int starts_used = 0;  // random starts plus the 8 deterministic ones
  int converged_count = 0;
  std::uint64_t seed = 0;
  SolveOptions settings;  // box_radius resolved
  bool extended = false;
  double cluster_radius = 0.0;
};

// Multistart damped Newton over A..F. The found set is a lower bound on the
// real solution set; completeness is never claimed.
// Throws ConditionFailure when check_conditions fails and !options.force.
SolveReport solve(const Configuration& cfg, const SolveOptions& options = {});

// Same search over A..G with Gauss-Newton least-squares steps (7 equations,
// 6 unknowns). Throws std::invalid_argument if cfg has no G.
SolveReport solve_extended(const Configuration& cfg, const SolveOptions& options = {});

// Representative of {(x,y), (y,x)} with the lexicographically smaller first point.
SolutionPair canonical(SolutionPair s);

// Max-coordinate distance between two pairs, minimized over swapping the second.
double pair_distance_mod_swap(const Point3& x1, const Point3& y1, const Point3& x2, const Point3& y2);

}  // namespace invsq
