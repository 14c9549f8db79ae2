#include "sutured/dynamics/flow.hpp"
#include "sutured/dynamics/monodromy.hpp"
#include "sutured/dynamics/setup.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace sutured::dynamics;

namespace {

ReebSystem three_fold() {
    ModelConfig cfg;
    cfg.n = 1;
    cfg.k = 3;
    return ReebSystem(HamiltonianModel(cfg), 1);
}

}  // namespace

static void BM_Time1Flow(benchmark::State& state) {
    auto sys = three_fold();
    Vec2 p = polar(1.1 * sys.model().critical_radius(), 0.3);
    FlowOptions opts = FlowOptions::with_tolerance(std::pow(10.0, -static_cast<double>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(time1_flow(sys.model(), p, opts));
}
BENCHMARK(BM_Time1Flow)->Arg(8)->Arg(10)->Arg(12);

static void BM_SaddleMonodromy(benchmark::State& state) {
    auto sys = three_fold();
    for (auto _ : state) benchmark::DoNotOptimize(saddle_monodromy(sys, 1, state.range(0)).determinant);
}
BENCHMARK(BM_SaddleMonodromy)->Arg(1)->Arg(4);

static void BM_FindSaddles(benchmark::State& state) {
    ModelConfig cfg;
    cfg.n = state.range(0);
    cfg.k = 3;
    HamiltonianModel m(cfg);
    for (auto _ : state) benchmark::DoNotOptimize(find_saddles(m).size());
}
BENCHMARK(BM_FindSaddles)->Arg(1)->Arg(3);
