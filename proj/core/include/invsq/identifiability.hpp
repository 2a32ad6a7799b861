#pragma once

#include <optional>
#include <vector>

#include "invsq/configuration.hpp"
#include "invsq/geom.hpp"
#include "invsq/solver.hpp"

namespace invsq {

// 1/|x-z|^2 + 1/|y-z|^2 - 1/|X*-z|^2 - 1/|Y*-z|^2: the seventh equation
// evaluated at a candidate anchor z for the pair (x, y).
// Throws EvaluationError if z coincides with x, y, X* or Y*.
double anchor_residual(const Point3& x, const Point3& y, const Configuration& cfg, const Point3& z);

// Known non-trivial solutions of the six-anchor system.
class BadAnchorProbe {
 public:
  // Throws std::invalid_argument if an extra's residual exceeds `tolerance`.
  BadAnchorProbe(const Configuration& cfg, std::vector<SolutionPair> extras, double tolerance = 1e-9);

  const std::vector<SolutionPair>& extras() const { return extras_; }
  double tolerance() const { return tolerance_; }
  bool empty() const { return extras_.empty(); }

 private:
  std::vector<SolutionPair> extras_;
  double tolerance_;
};

// Non-trivial solutions of a report.
std::vector<SolutionPair> nontrivial(const SolveReport& report);

// Default threshold for one extra at g: 1e-8 * scale * |grad_z anchor_residual(g)|,
// i.e. g within about 1e-8 * scale of that extra's zero surface. Central
// differences with step 1e-6 * scale.
double default_bad_anchor_tol(const SolutionPair& extra, const Configuration& cfg, const Point3& g);

// True iff some extra still satisfies the seventh equation at g:
// |anchor_residual| <= tol (or the per-extra default). Empty probe: false.
bool is_bad_anchor(const BadAnchorProbe& probe, const Configuration& cfg, const Point3& g,
                   std::optional<double> tol = std::nullopt);

struct GridBox {
  Point3 lo;
  Point3 hi;
  int n = 16;  // samples per axis, >= 2
};

// Grid points where the product of anchor residuals over all extras changes
// sign along a grid edge (the endpoint with the smaller |product| is kept) or
// has |product| <= tol. Sorted lexicographically, no duplicates.
std::vector<Point3> sample_bad_surface(const BadAnchorProbe& probe, const Configuration& cfg,
                                       const GridBox& box, double tol = 0.0);

}  // namespace invsq
