#include <string>

#include <benchmark/benchmark.h>

#include "birank/generators.hpp"
#include "birank/normalize.hpp"
#include "birank/rank.hpp"

namespace {

void BM_RankIteration(benchmark::State& state) {
    const auto edges = static_cast<std::size_t>(state.range(0));
    const std::size_t u = 10000;
    const std::size_t p = 20000;
    const double density = static_cast<double>(edges) / (static_cast<double>(u) * static_cast<double>(p));
    const auto graph = birank::gen_random({u, p, birank::RandomKind{density}, 2});
    const auto tp = birank::normalize(graph, birank::Scheme::BiRank);
    const auto p0 = birank::QueryVector::uniform(birank::kPSide, p);
    const auto u0 = birank::QueryVector::uniform(birank::kUSide, u);
    birank::RankConfig cfg;
    cfg.max_iters = 1;
    cfg.tol = 1e-300;
    for (auto _ : state) {
        auto r = birank::rank(tp, p0, u0, cfg);
        benchmark::DoNotOptimize(r.p.data());
    }
    state.counters["edges"] = static_cast<double>(graph.edge_count());
}

BENCHMARK(BM_RankIteration)->RangeMultiplier(2)->Range(250000, 2000000)->Unit(benchmark::kMillisecond);

void BM_Normalize(benchmark::State& state) {
    const auto graph = birank::gen_random({10000, 20000, birank::RandomKind{0.005}, 3});
    const auto scheme = static_cast<birank::Scheme>(state.range(0));
    for (auto _ : state) {
        auto tp = birank::normalize(graph, scheme);
        benchmark::DoNotOptimize(tp.forward.nnz());
    }
    state.SetLabel(std::string(birank::to_string(scheme)));
}

BENCHMARK(BM_Normalize)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

void BM_PowerLawGeneration(benchmark::State& state) {
    const auto u = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        auto g = birank::gen_powerlaw({u, 2 * u, birank::PowerLawKind{2.0}, 4});
        benchmark::DoNotOptimize(g.edge_count());
    }
}

BENCHMARK(BM_PowerLawGeneration)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

}  // namespace
