#include <benchmark/benchmark.h>

#include "symedge/betti.hpp"
#include "symedge/cliques.hpp"
#include "symedge/graph_classes.hpp"
#include "symedge/order_constructions.hpp"
#include "symedge/symbolic.hpp"

using namespace symedge;

namespace {

Graph wheel_like_7() {
    return Graph::from_edges(7, {{1, 2},
                                 {2, 3},
                                 {3, 4},
                                 {4, 5},
                                 {5, 6},
                                 {1, 6},
                                 {2, 7},
                                 {3, 7},
                                 {5, 7},
                                 {6, 7}});
}

Graph complete(int n) {
    Graph g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
    return g;
}

void BM_SymbolicPower(benchmark::State& state) {
    Graph g = wheel_like_7();
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        MonomialIdeal ideal = symbolic_power(g, m);
        benchmark::DoNotOptimize(ideal);
    }
}
BENCHMARK(BM_SymbolicPower)->DenseRange(1, 5);

void BM_CliqueDecomposition(benchmark::State& state) {
    Graph g = wheel_like_7();
    const int m = static_cast<int>(state.range(0));
    for (auto _ : state) {
        MonomialIdeal ideal = perfect_symbolic_power(g, m);
        benchmark::DoNotOptimize(ideal);
    }
}
BENCHMARK(BM_CliqueDecomposition)->DenseRange(1, 6);

void BM_I2Order(benchmark::State& state) {
    Graph g = complement(Graph::from_edges(
        7, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}}));  // complement of a path
    for (auto _ : state) {
        QuotientOrder order = i2_order(g);
        benchmark::DoNotOptimize(order);
    }
}
BENCHMARK(BM_I2Order);

void BM_QuotientsChecker(benchmark::State& state) {
    Graph g = complete(7);
    MonomialIdeal ideal = symbolic_power(g, 2);
    MonomialIdeal comp = graded_component(ideal, 4);
    auto gc_peo = peo(complement(g));
    auto order = peo_lex_order_of(comp, *gc_peo);
    for (auto _ : state) {
        auto cert = check_linear_quotients_order(comp, order);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_QuotientsChecker);

void BM_MultigradedBetti(benchmark::State& state) {
    MonomialIdeal ideal = symbolic_power(complete(4), 2);
    for (auto _ : state) {
        BettiTable table = multigraded_betti(ideal);
        benchmark::DoNotOptimize(table);
    }
}
BENCHMARK(BM_MultigradedBetti);

void BM_MaximalCliques(benchmark::State& state) {
    Graph g = complement(wheel_like_7());
    for (auto _ : state) {
        CliqueSet cliques = maximal_cliques(g);
        benchmark::DoNotOptimize(cliques);
    }
}
BENCHMARK(BM_MaximalCliques);

}  // namespace

BENCHMARK_MAIN();
