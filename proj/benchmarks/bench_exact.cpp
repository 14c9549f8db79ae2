#include "sutured/chain/chain_complex.hpp"
#include "sutured/linalg/qmatrix.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace sutured;

static void BM_RankRandomRational(benchmark::State& state) {
    const auto size = static_cast<std::size_t>(state.range(0));
    std::mt19937 gen(1);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    linalg::QMatrix m(size, size);
    for (std::size_t r = 0; r < size; ++r) {
        for (std::size_t c = 0; c < size; ++c) m(r, c) = linalg::Rational(num(gen), den(gen));
    }
    for (auto _ : state) benchmark::DoNotOptimize(linalg::rank(m));
}
BENCHMARK(BM_RankRandomRational)->Arg(4)->Arg(8)->Arg(16)->Arg(32);

static void BM_TheoremCheck(benchmark::State& state) {
    orbits::TorusParams p(3, -7, 2);
    for (auto _ : state) benchmark::DoNotOptimize(chain::theorem_check(p, state.range(0)).all_match());
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_TheoremCheck)->Arg(60)->Arg(600);
