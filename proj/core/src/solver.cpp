#include "invsq/solver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include <Eigen/Dense>

#include "invsq/elimination.hpp"
#include "invsq/errors.hpp"
#include "invsq/genericity.hpp"

namespace invsq {

std::vector<double> residual(const Configuration& cfg, const Point3& x, const Point3& y,
                             bool include_g) {
  if (include_g && !cfg.has_g()) throw std::invalid_argument("residual: configuration has no G");
  const int m = include_g ? 7 : 6;
  std::vector<double> r(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const Label l = label_at(i);
    const Point3& t = cfg.anchor(l);
    const double dx = dist_sq(x, t);
    const double dy = dist_sq(y, t);
    if (dx == 0.0 || dy == 0.0) {
      throw EvaluationError("residual: point coincides with anchor " + std::string(label_name(l)));
    }
    r[static_cast<std::size_t>(i)] = 1.0 / dx + 1.0 / dy - cfg.k(l);
  }
  return r;
}

double residual_norm(const Configuration& cfg, const Point3& x, const Point3& y, bool include_g) {
  double s = 0.0;
  for (double v : residual(cfg, x, y, include_g)) s += v * v;
  return std::sqrt(s);
}

Certificates certificates_at(const Configuration& cfg, const Point3& y) {
  Certificates c;
  for (std::size_t i = 0; i < 6; ++i) {
    try {
      c.phi[i] = phi(cfg, kSixLabels[i], y);
    } catch (const SingularLocus&) {
    }
  }
  const auto& pairs = omitted_pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    try {
      c.psi[i] = psi(cfg, pairs[i], y);
    } catch (const SingularLocus&) {
    } catch (const CoplanarFrame&) {
    }
  }
  return c;
}

SolutionPair canonical(SolutionPair s) {
  if (s.y < s.x) std::swap(s.x, s.y);
  return s;
}

namespace {

double max_abs_diff(const Point3& a, const Point3& b) {
  return std::max({std::abs(a.x - b.x), std::abs(a.y - b.y), std::abs(a.z - b.z)});
}

}  // namespace

double pair_distance_mod_swap(const Point3& x1, const Point3& y1, const Point3& x2, const Point3& y2) {
  const double direct = std::max(max_abs_diff(x1, x2), max_abs_diff(y1, y2));
  const double swapped = std::max(max_abs_diff(x1, y2), max_abs_diff(y1, x2));
  return std::min(direct, swapped);
}

namespace {

using Vec6 = Eigen::Matrix<double, 6, 1>;
using ResVec = Eigen::Matrix<double, Eigen::Dynamic, 1, 0, 7, 1>;
using Jac = Eigen::Matrix<double, Eigen::Dynamic, 6, 0, 7, 6>;

// Anchors and right-hand sides flattened for the inner loop.
struct System {
  int m = 6;
  std::array<Eigen::Vector3d, 7> anchors;
  std::array<double, 7> k{};
};

System make_system(const Configuration& cfg, bool extended) {
  System s;
  s.m = extended ? 7 : 6;
  for (int i = 0; i < s.m; ++i) {
    const Point3& t = cfg.anchor(label_at(i));
    s.anchors[static_cast<std::size_t>(i)] = {t.x, t.y, t.z};
    s.k[static_cast<std::size_t>(i)] = cfg.k(label_at(i));
  }
  return s;
}

enum class Form { kOriginal, kCleared };

// Original: 1/dx + 1/dy - k. Cleared: dx + dy - k dx dy, the same zero set
// away from the anchors but without poles, which gives Newton far larger
// basins of attraction. Returns false on non-finite values or an anchor hit.
bool eval_residual(const System& s, const Vec6& z, Form form, ResVec& f) {
  f.resize(s.m);
  for (int i = 0; i < s.m; ++i) {
    const auto& t = s.anchors[static_cast<std::size_t>(i)];
    const double k = s.k[static_cast<std::size_t>(i)];
    const double dx = (z.head<3>() - t).squaredNorm();
    const double dy = (z.tail<3>() - t).squaredNorm();
    if (form == Form::kCleared) {
      f(i) = dx + dy - k * dx * dy;
    } else {
      if (!(dx > 0.0) || !(dy > 0.0)) return false;
      f(i) = 1.0 / dx + 1.0 / dy - k;
    }
  }
  return f.allFinite();
}

void eval_jacobian(const System& s, const Vec6& z, Form form, Jac& j) {
  j.resize(s.m, 6);
  for (int i = 0; i < s.m; ++i) {
    const auto& t = s.anchors[static_cast<std::size_t>(i)];
    const double k = s.k[static_cast<std::size_t>(i)];
    const Eigen::Vector3d ex = z.head<3>() - t;
    const Eigen::Vector3d ey = z.tail<3>() - t;
    const double dx = ex.squaredNorm();
    const double dy = ey.squaredNorm();
    if (form == Form::kCleared) {
      j.row(i).head<3>() = (2.0 * (1.0 - k * dy)) * ex.transpose();
      j.row(i).tail<3>() = (2.0 * (1.0 - k * dx)) * ey.transpose();
    } else {
      j.row(i).head<3>() = (-2.0 / (dx * dx)) * ex.transpose();
      j.row(i).tail<3>() = (-2.0 / (dy * dy)) * ey.transpose();
    }
  }
}

struct Candidate {
  Vec6 z;
  double residual;
};

struct NewtonLimits {
  int max_iter;
  double newton_tol;
  Eigen::Vector3d center;
  double escape_radius;
};

enum class Outcome { kConverged, kStalled, kEscaped };

// Damped Newton / Gauss-Newton on one form: minimum-norm step from a
// rank-revealing decomposition, halved until the residual norm decreases.
Outcome newton_phase(const System& s, Vec6& z, Form form, int max_iter, const NewtonLimits& lim) {
  ResVec f;
  if (!eval_residual(s, z, form, f)) return Outcome::kStalled;
  double nf = f.norm();
  Jac jac;
  ResVec trial;
  for (int iter = 0; iter < max_iter && nf > 0.0; ++iter) {
    eval_jacobian(s, z, form, jac);
    Eigen::CompleteOrthogonalDecomposition<Jac> cod(jac);
    cod.setThreshold(1e-12);
    const Vec6 dz = cod.solve(-f);
    if (!dz.allFinite()) return Outcome::kStalled;

    double t = 1.0;
    bool accepted = false;
    Vec6 next;
    for (int halving = 0; halving < 40; ++halving, t *= 0.5) {
      next = z + t * dz;
      if (eval_residual(s, next, form, trial) && trial.norm() < nf) {
        accepted = true;
        break;
      }
    }
    if (!accepted) return Outcome::kStalled;
    const double step = (t * dz).norm();
    z = next;
    f = trial;
    nf = f.norm();
    if ((z.head<3>() - lim.center).norm() > lim.escape_radius ||
        (z.tail<3>() - lim.center).norm() > lim.escape_radius) {
      return Outcome::kEscaped;
    }
    if (step <= lim.newton_tol * (1.0 + z.norm())) return Outcome::kConverged;
  }
  return Outcome::kConverged;
}

std::optional<Candidate> run_newton(const System& s, Vec6 z, const NewtonLimits& lim) {
  if (newton_phase(s, z, Form::kCleared, lim.max_iter, lim) == Outcome::kEscaped) return std::nullopt;
  if (newton_phase(s, z, Form::kOriginal, 8, lim) == Outcome::kEscaped) return std::nullopt;
  ResVec f;
  if (!eval_residual(s, z, Form::kOriginal, f)) return std::nullopt;
  return Candidate{z, f.norm()};
}

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::vector<Vec6> deterministic_starts(const Configuration& cfg) {
  std::vector<Vec6> out;
  auto push = [&](const Point3& x, const Point3& y) {
    Vec6 z;
    z << x.x, x.y, x.z, y.x, y.y, y.z;
    out.push_back(z);
  };
  push(cfg.x_star(), cfg.y_star());
  push(cfg.y_star(), cfg.x_star());
  const auto& a = cfg.anchors();
  for (std::size_t i = 0; i < 6; ++i) {
    push(midpoint(a[i], a[(i + 1) % 6]), midpoint(a[(i + 3) % 6], a[(i + 4) % 6]));
  }
  return out;
}

Vec6 random_start(std::uint64_t seed, std::uint64_t index, const Point3& c, double radius) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  std::mt19937_64 rng(seq);
  Vec6 z;
  const std::array<double, 3> cc = {c.x, c.y, c.z};
  for (int i = 0; i < 6; ++i) {
    z(i) = cc[static_cast<std::size_t>(i % 3)] + radius * (2.0 * uniform01(rng) - 1.0);
  }
  return z;
}

Point3 to_point(const Eigen::Ref<const Eigen::Vector3d>& v) { return {v(0), v(1), v(2)}; }

SolveReport run_solve(const Configuration& cfg, const SolveOptions& options, bool extended) {
  if (options.starts < 0 || options.max_iter <= 0) {
    throw std::invalid_argument("solve: starts must be >= 0 and max_iter > 0");
  }
  if (!options.force) {
    const GenericityReport gr = check_conditions(cfg);
    if (!gr.condition_i || !gr.condition_ii) {
      throw ConditionFailure(std::string("genericity conditions fail:") +
                             (gr.condition_i ? "" : " (i)") + (gr.condition_ii ? "" : " (ii)"));
    }
  }

  SolveReport report;
  report.extended = extended;
  report.seed = options.seed;
  report.settings = options;
  const double diameter = cfg.diameter();
  const double radius = options.box_radius.value_or(diameter);
  report.settings.box_radius = radius;
  const double scale = cfg.scale();
  report.cluster_radius = 1e-6 * scale;

  const System sys = make_system(cfg, extended);
  const Point3 center = cfg.centroid();
  const NewtonLimits lim{options.max_iter, options.newton_tol, {center.x, center.y, center.z},
                         1e4 * (radius + diameter + scale)};

  const std::vector<Vec6> fixed = deterministic_starts(cfg);
  const std::size_t total = fixed.size() + static_cast<std::size_t>(options.starts);
  report.starts_used = static_cast<int>(total);

  std::vector<std::optional<Candidate>> results(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      const Vec6 z0 = i < fixed.size() ? fixed[i]
                                       : random_start(options.seed, i - fixed.size(), center, radius);
      results[i] = run_newton(sys, z0, lim);
    }
  };
  unsigned nthreads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  nthreads = std::clamp(nthreads, 1u, 64u);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  }

  // Deterministic merge: canonicalize, sort, then cluster in sorted order.
  std::vector<SolutionPair> accepted;
  for (const auto& r : results) {
    if (!r || !(r->residual <= options.accept_tol)) continue;
    SolutionPair s;
    s.x = to_point(r->z.head<3>());
    s.y = to_point(r->z.tail<3>());
    s.residual_norm = r->residual;
    accepted.push_back(canonical(s));
  }
  report.converged_count = static_cast<int>(accepted.size());
  auto key_less = [](const SolutionPair& a, const SolutionPair& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.y < b.y;
  };
  std::sort(accepted.begin(), accepted.end(), key_less);

  std::vector<SolutionPair> reps;
  std::vector<std::size_t> best;  // member with the smallest residual per cluster
  for (const auto& s : accepted) {
    bool merged = false;
    for (std::size_t c = 0; c < reps.size(); ++c) {
      if (pair_distance_mod_swap(s.x, s.y, reps[c].x, reps[c].y) <= report.cluster_radius) {
        if (s.residual_norm < accepted[best[c]].residual_norm) best[c] = static_cast<std::size_t>(&s - accepted.data());
        merged = true;
        break;
      }
    }
    if (!merged) {
      reps.push_back(s);
      best.push_back(static_cast<std::size_t>(&s - accepted.data()));
    }
  }

  for (std::size_t c = 0; c < reps.size(); ++c) {
    SolutionPair s = accepted[best[c]];
    s.residual_norm = residual_norm(cfg, s.x, s.y, extended);
    s.is_trivial = pair_distance_mod_swap(s.x, s.y, cfg.x_star(), cfg.y_star()) <= report.cluster_radius;
    s.certificates = certificates_at(cfg, s.y);
    report.solutions.push_back(s);
  }
  std::sort(report.solutions.begin(), report.solutions.end(), key_less);
  return report;
}

}  // namespace

SolveReport solve(const Configuration& cfg, const SolveOptions& options) {
  return run_solve(cfg, options, false);
}

SolveReport solve_extended(const Configuration& cfg, const SolveOptions& options) {
  if (!cfg.has_g()) throw std::invalid_argument("solve_extended: configuration has no G");
  return run_solve(cfg, options, true);
}

}  // namespace invsq
