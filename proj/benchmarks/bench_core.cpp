#include <benchmark/benchmark.h>

#include "cylinderlab/generate.hpp"
#include "cylinderlab/span_solver.hpp"
#include "cylinderlab/structure.hpp"
#include "cylinderlab/z_lift.hpp"

namespace {

using namespace cylinderlab;

void BM_SolverBuild(benchmark::State& state) {
  const PrimeModulus p(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    SpanSolver solver(make_family(p, FamilyTag::ParallelDiffs));
    benchmark::DoNotOptimize(solver.rank());
  }
}
BENCHMARK(BM_SolverBuild)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_Decompose(benchmark::State& state) {
  const PrimeModulus p(static_cast<int>(state.range(0)));
  const WeightFp w = generate_random_divisible(p, 42, 0);
  (void)decompose_p_divisible(w);  // warm the solver cache
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose_p_divisible(w));
  }
}
BENCHMARK(BM_Decompose)->Arg(3)->Arg(5)->Arg(7)->Unit(benchmark::kMicrosecond);

void BM_LiftSet(benchmark::State& state) {
  const PrimeModulus p(static_cast<int>(state.range(0)));
  const WeightZ cyl = generate_cylinder(p, Direction{{0, 0, 1}}, 7);
  (void)lift_set(cyl);
  for (auto _ : state) {
    benchmark::DoNotOptimize(lift_set(cyl));
  }
}
BENCHMARK(BM_LiftSet)->Arg(2)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_SccCheck(benchmark::State& state) {
  const PrimeModulus p(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(exhaustive_scc_check(p));
  }
}
BENCHMARK(BM_SccCheck)->Arg(2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
