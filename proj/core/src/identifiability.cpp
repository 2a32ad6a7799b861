#include "invsq/identifiability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "invsq/errors.hpp"

namespace invsq {

double anchor_residual(const Point3& x, const Point3& y, const Configuration& cfg, const Point3& z) {
  const double dx = dist_sq(x, z);
  const double dy = dist_sq(y, z);
  const double dxs = dist_sq(cfg.x_star(), z);
  const double dys = dist_sq(cfg.y_star(), z);
  if (dx == 0.0 || dy == 0.0 || dxs == 0.0 || dys == 0.0) {
    throw EvaluationError("anchor_residual: z coincides with a solution point");
  }
  return 1.0 / dx + 1.0 / dy - 1.0 / dxs - 1.0 / dys;
}

BadAnchorProbe::BadAnchorProbe(const Configuration& cfg, std::vector<SolutionPair> extras, double tolerance)
    : extras_(std::move(extras)), tolerance_(tolerance) {
  for (const auto& e : extras_) {
    if (!(residual_norm(cfg, e.x, e.y) <= tolerance_)) {
      throw std::invalid_argument("BadAnchorProbe: extra does not solve the six-anchor system");
    }
  }
}

std::vector<SolutionPair> nontrivial(const SolveReport& report) {
  std::vector<SolutionPair> out;
  for (const auto& s : report.solutions) {
    if (!s.is_trivial) out.push_back(s);
  }
  return out;
}

double default_bad_anchor_tol(const SolutionPair& extra, const Configuration& cfg, const Point3& g) {
  const double scale = std::max(cfg.scale(), std::abs(g.x) + std::abs(g.y) + std::abs(g.z));
  const double h = 1e-6 * scale;
  double grad_sq = 0.0;
  for (int i = 0; i < 3; ++i) {
    const Point3 step(i == 0 ? h : 0.0, i == 1 ? h : 0.0, i == 2 ? h : 0.0);
    const double d = (anchor_residual(extra.x, extra.y, cfg, g + step) -
                      anchor_residual(extra.x, extra.y, cfg, g - step)) / (2.0 * h);
    grad_sq += d * d;
  }
  return 1e-8 * scale * std::sqrt(grad_sq);
}

bool is_bad_anchor(const BadAnchorProbe& probe, const Configuration& cfg, const Point3& g,
                   std::optional<double> tol) {
  for (const auto& e : probe.extras()) {
    try {
      const double r = anchor_residual(e.x, e.y, cfg, g);
      const double t = tol ? *tol : default_bad_anchor_tol(e, cfg, g);
      if (std::abs(r) <= t) return true;
    } catch (const EvaluationError&) {
      // g on a pole of this extra's residual: the equation cannot hold there.
    }
  }
  return false;
}

namespace {

double residual_product(const BadAnchorProbe& probe, const Configuration& cfg, const Point3& z) {
  double p = 1.0;
  for (const auto& e : probe.extras()) {
    try {
      p *= anchor_residual(e.x, e.y, cfg, z);
    } catch (const EvaluationError&) {
      return std::numeric_limits<double>::quiet_NaN();
    }
  }
  return p;
}

}  // namespace

std::vector<Point3> sample_bad_surface(const BadAnchorProbe& probe, const Configuration& cfg,
                                       const GridBox& box, double tol) {
  if (box.n < 2) throw std::invalid_argument("sample_bad_surface: grid needs at least 2 samples per axis");
  std::vector<Point3> out;
  if (probe.empty()) return out;

  const int n = box.n;
  auto coord = [&](double lo, double hi, int i) { return lo + (hi - lo) * static_cast<double>(i) / (n - 1); };
  auto at = [&](int i, int j, int k) {
    return Point3(coord(box.lo.x, box.hi.x, i), coord(box.lo.y, box.hi.y, j), coord(box.lo.z, box.hi.z, k));
  };
  const auto idx = [n](int i, int j, int k) {
    return (static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)) *
               static_cast<std::size_t>(n) + static_cast<std::size_t>(k);
  };

  std::vector<double> f(static_cast<std::size_t>(n) * static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) f[idx(i, j, k)] = residual_product(probe, cfg, at(i, j, k));

  std::vector<char> hit(f.size(), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const std::size_t a = idx(i, j, k);
        if (std::isnan(f[a])) continue;
        if (std::abs(f[a]) <= tol) hit[a] = 1;
        const int nb[3][3] = {{i + 1, j, k}, {i, j + 1, k}, {i, j, k + 1}};
        for (const auto& q : nb) {
          if (q[0] >= n || q[1] >= n || q[2] >= n) continue;
          const std::size_t b = idx(q[0], q[1], q[2]);
          if (std::isnan(f[b])) continue;
          if ((f[a] < 0.0 && f[b] > 0.0) || (f[a] > 0.0 && f[b] < 0.0)) {
            hit[std::abs(f[a]) <= std::abs(f[b]) ? a : b] = 1;
          }
        }
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        if (hit[idx(i, j, k)]) out.push_back(at(i, j, k));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace invsq
