#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace invsq::cli {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;  // a condition fails
inline constexpr int kExitUsage = 2;     // usage, I/O, parse or degeneracy error

int run_check(const std::string& config_path, std::ostream& out, std::ostream& err);

struct SolveArgs {
  std::string config_path;
  int starts = 2000;
  std::uint64_t seed = 1;
  double tol = 1e-9;
  bool extended = false;
  bool force = false;
  unsigned threads = 0;
};
int run_solve(const SolveArgs& args, std::ostream& out, std::ostream& err);

// Inputs are decimal or "p/q" literals, read exactly.
struct CoaxialArgs {
  std::string r1, r2, a3, d3, u, v;
  std::string precision = "1e-12";
};
int run_coaxial(const CoaxialArgs& args, std::ostream& out, std::ostream& err);

struct BadSurfaceArgs {
  std::string config_path;
  std::array<double, 6> box{};  // x0 x1 y0 y1 z0 z1
  int grid = 16;
  int starts = 2000;
  std::uint64_t seed = 1;
  bool force = false;
  unsigned threads = 0;
};
int run_badsurface(const BadSurfaceArgs& args, std::ostream& out, std::ostream& err);

}  // namespace invsq::cli
