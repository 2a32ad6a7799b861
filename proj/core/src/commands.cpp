#include "invsq/commands.hpp"

#include <ostream>
#include <string>

#include "invsq/coaxial.hpp"
#include "invsq/config_io.hpp"
#include "invsq/errors.hpp"
#include "invsq/genericity.hpp"
#include "invsq/identifiability.hpp"
#include "invsq/solver.hpp"

namespace invsq::cli {

namespace {

std::string quad_name(const Quadruple& q) {
  std::string s;
  for (Label l : q) s += label_name(l);
  return s;
}

SolveOptions solve_options(int starts, std::uint64_t seed, double tol, bool force, unsigned threads) {
  SolveOptions o;
  o.starts = starts;
  o.seed = seed;
  o.accept_tol = tol;
  o.force = force;
  o.threads = threads;
  return o;
}

}  // namespace

int run_check(const std::string& config_path, std::ostream& out, std::ostream& err) {
  try {
    const ConfigFile file = load_config(config_path);
    const Configuration& cfg = file.config;
    const GenericityReport r = check_conditions(cfg);
    for (Label l : kSixLabels) out << "k_" << label_name(l) << '\t' << format_real(cfg.k(l)) << '\n';
    const auto& quads = anchor_quadruples();
    for (std::size_t q = 0; q < quads.size(); ++q) {
      out << "delta_" << quad_name(quads[q]) << '\t' << format_real(r.delta_values[q]) << '\n';
    }
    for (std::size_t q = 0; q < quads.size(); ++q) {
      out << "omega_" << quad_name(quads[q]) << '\t' << format_real(r.omega_values[q]) << '\n';
    }
    out << "condition (i)\t" << (r.condition_i ? "PASS" : "FAIL");
    for (const auto& q : r.failing_quadruples_i) out << ' ' << quad_name(q);
    out << '\n';
    out << "condition (ii)\t" << (r.condition_ii ? "PASS" : "FAIL");
    for (const auto& q : r.failing_quadruples_ii) out << ' ' << quad_name(q);
    out << '\n';
    return r.condition_i && r.condition_ii ? kExitOk : kExitNegative;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_solve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const ConfigFile file = load_config(args.config_path);
    const SolveOptions opts = solve_options(args.starts, args.seed, args.tol, args.force, args.threads);
    SolveReport report;
    if (args.extended) {
      if (!file.config.has_g()) {
        err << "error: --extended needs a G line in the configuration\n";
        return kExitUsage;
      }
      report = solve_extended(file.config, opts);
    } else {
      report = solve(file.config, opts);
    }
    out << format_solutions_tsv(report.solutions);
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_coaxial(const CoaxialArgs& args, std::ostream& out, std::ostream& err) {
  try {
    const CoaxialConfig cc(parse_rat(args.r1), parse_rat(args.r2), parse_rat(args.a3), parse_rat(args.d3),
                           parse_rat(args.u), parse_rat(args.v));
    const Rat precision = parse_rat(args.precision);
    out << "kappa1\t" << rat_token(kappa(cc, 1)) << '\n';
    out << "kappa2\t" << rat_token(kappa(cc, 2)) << '\n';

    RatPoly eliminant;
    if (rational_u_of_v(cc).denom.is_zero()) {
      out << "# both circles on one plane: U is not a rational function of V; using Res_U\n";
      eliminant = axis_resultant(cc);
      out << "resultant\t" << eliminant.to_string() << '\n';
    } else {
      eliminant = w_polynomial(cc);
      out << "w\t" << eliminant.to_string() << '\n';
    }
    out << "w_primitive\t" << eliminant.primitive().to_string() << '\n';
    const auto factors = square_free_decomposition(eliminant);
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (factors[k].degree() < 1) continue;
      out << "square_free_factor\tmultiplicity=" << k + 1 << '\t' << factors[k].primitive().to_string() << '\n';
    }
    for (const auto& r : real_roots(eliminant, precision)) {
      out << "root\t" << format_real(r.approx()) << "\tmultiplicity=" << r.multiplicity << "\t[" << rat_token(r.lo)
          << ", " << rat_token(r.hi) << "]\n";
    }
    out << format_solutions_tsv(enumerate_axis_solutions(cc));
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int run_badsurface(const BadSurfaceArgs& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.grid < 2) {
      err << "error: --grid must be at least 2\n";
      return kExitUsage;
    }
    const ConfigFile file = load_config(args.config_path);
    const Configuration cfg = file.config.without_g();
    const SolveReport report = solve(cfg, solve_options(args.starts, args.seed, 1e-9, args.force, args.threads));
    const auto extras = nontrivial(report);
    if (extras.empty()) {
      out << "# no non-trivial solutions found\n";
      return kExitOk;
    }
    for (const auto& e : extras) {
      out << "# extra " << format_real(e.x.x) << ' ' << format_real(e.x.y) << ' ' << format_real(e.x.z) << ' '
          << format_real(e.y.x) << ' ' << format_real(e.y.y) << ' ' << format_real(e.y.z) << '\n';
    }
    const BadAnchorProbe probe(cfg, extras);
    const GridBox box{Point3(args.box[0], args.box[2], args.box[4]), Point3(args.box[1], args.box[3], args.box[5]),
                      args.grid};
    out << format_point_cloud(sample_bad_surface(probe, cfg, box));
    return kExitOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace invsq::cli
