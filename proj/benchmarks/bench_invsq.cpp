#include <benchmark/benchmark.h>

#include <array>
#include <cmath>

#include "invsq/coaxial.hpp"
#include "invsq/genericity.hpp"
#include "invsq/solver.hpp"

namespace {

using namespace invsq;

Configuration generic_configuration() {
  const std::array<Point3, 6> a = {Point3(1.5, 0.25, -0.5),  Point3(-1, 1.75, 0.5),   Point3(0.5, -1.5, 1.25),
                                   Point3(-0.75, -0.5, -1.5), Point3(1.25, 1.5, 1.75), Point3(-1.5, 0.75, -1.25)};
  return Configuration(a, Point3(0.25, 0.5, 0.75), Point3(-0.5, -0.25, 0.25));
}

void BM_CheckConditions(benchmark::State& state) {
  const Configuration cfg = generic_configuration();
  for (auto _ : state) benchmark::DoNotOptimize(check_conditions(cfg));
}
BENCHMARK(BM_CheckConditions);

void BM_Solve(benchmark::State& state) {
  const Configuration cfg = generic_configuration();
  SolveOptions o;
  o.starts = static_cast<int>(state.range(0));
  o.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(solve(cfg, o));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Solve)->Arg(100)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_SolveExtended(benchmark::State& state) {
  const Configuration cfg = generic_configuration().with_g(Point3(2, -1.75, 0.5));
  SolveOptions o;
  o.starts = 1000;
  o.threads = 1;
  for (auto _ : state) benchmark::DoNotOptimize(solve_extended(cfg, o));
}
BENCHMARK(BM_SolveExtended)->Unit(benchmark::kMillisecond);

void BM_WPolynomial(benchmark::State& state) {
  const CoaxialConfig cc(2, 3, 1, -1, 3, -2);
  for (auto _ : state) benchmark::DoNotOptimize(w_polynomial(cc));
}
BENCHMARK(BM_WPolynomial);

void BM_RealRoots(benchmark::State& state) {
  const RatPoly w = w_polynomial(CoaxialConfig(2, 3, 1, -1, 3, -2));
  Rat precision(1);
  for (int i = 0; i < state.range(0); ++i) precision /= 10;
  for (auto _ : state) benchmark::DoNotOptimize(real_roots(w, precision));
}
BENCHMARK(BM_RealRoots)->Arg(6)->Arg(30)->Unit(benchmark::kMicrosecond);

void BM_EnumerateAxisSolutions(benchmark::State& state) {
  const CoaxialConfig cc(2, 3, 1, -1, 3, -2);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_axis_solutions(cc));
}
BENCHMARK(BM_EnumerateAxisSolutions)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
