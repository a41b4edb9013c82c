#include <vector>

#include <benchmark/benchmark.h>

#include "birank/generators.hpp"

namespace {

void BM_CsrMultiply(benchmark::State& state) {
    const auto edges = static_cast<std::size_t>(state.range(0));
    const std::size_t u = 10000;
    const std::size_t p = 20000;
    const double density = static_cast<double>(edges) / (static_cast<double>(u) * static_cast<double>(p));
    const auto graph = birank::gen_random({u, p, birank::RandomKind{density}, 1});
    const auto threads = static_cast<unsigned>(state.range(1));
    std::vector<double> x(p, 1.0);
    std::vector<double> y(u);
    for (auto _ : state) {
        graph.weights().multiply(x, y, threads);
        benchmark::DoNotOptimize(y.data());
    }
    state.counters["nnz"] = static_cast<double>(graph.edge_count());
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(graph.edge_count()));
}

BENCHMARK(BM_CsrMultiply)
    ->ArgsProduct({{200000, 500000, 1000000, 2000000}, {1, 2}})
    ->Unit(benchmark::kMicrosecond);

}  // namespace
