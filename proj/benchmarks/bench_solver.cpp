#include "gew/assembly.hpp"
#include "gew/experiment.hpp"
#include "gew/stepper.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace gew;

const GewParams kParams{2, 3.0, 1.0};

SplineVec soliton_state(int n_elems) {
    const Mesh mesh(0.0, 80.0, n_elems);
    return project_initial(ic_single(kParams, {0.5, 30.0}), mesh);
}

void BM_Assemble(benchmark::State& state) {
    const SplineVec d = soliton_state(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(assemble_cn_system(d, d, kParams, 0.2));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Assemble)->RangeMultiplier(2)->Range(200, 6400)->Complexity(benchmark::oN);

void BM_BandedSolve(benchmark::State& state) {
    const SplineVec d = soliton_state(static_cast<int>(state.range(0)));
    const BandedSystem sys = assemble_cn_system(d, d, kParams, 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(banded_solve(sys));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BandedSolve)->RangeMultiplier(2)->Range(200, 6400)->Complexity(benchmark::oN);

void BM_Step(benchmark::State& state) {
    const TimeGrid grid{0.2, 20.0, static_cast<int>(state.range(0))};
    StepperState st = make_initial_state(soliton_state(800));
    st = step(st, kParams, grid);
    for (auto _ : state) benchmark::DoNotOptimize(step(st, kParams, grid));
}
BENCHMARK(BM_Step)->Arg(1)->Arg(2)->Arg(5);

void BM_SingleSolitonRun(benchmark::State& state) {
    const ExperimentConfig cfg = default_config(ProblemKind::Single);
    for (auto _ : state) benchmark::DoNotOptimize(run_experiment(cfg));
}
BENCHMARK(BM_SingleSolitonRun)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
