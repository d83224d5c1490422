#include <benchmark/benchmark.h>

#include "qgx/assignment.hpp"
#include "qgx/combinatorics.hpp"
#include "qgx/graphs.hpp"
#include "qgx/grouping.hpp"
#include "qgx/sequences.hpp"
#include "qgx/symmetric.hpp"

using namespace qgx;

namespace {

SymbolVector random_symbols(Rng& rng, std::size_t n, int k) {
    std::vector<int> v(n);
    for (auto& s : v) s = static_cast<int>(uniform_int(rng, 1, k));
    return SymbolVector(std::move(v), k);
}

AdjacencyMatrix random_graph(Rng& rng, std::size_t n) {
    AdjacencyMatrix g(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) g.set_edge(i, j, fair_coin(rng));
    return g;
}

void BM_Hungarian(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(1);
    CostMatrix c(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c(i, j) = unit_real(rng);
    for (auto _ : state) benchmark::DoNotOptimize(hungarian(c));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Hungarian)->RangeMultiplier(2)->Range(8, 256)->Complexity(benchmark::oNCubed);

void BM_EditDistance(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    Rng rng(2);
    std::string s(n, 'a'), t(n, 'a');
    for (auto& c : s) c = "acgt"[uniform_int(rng, 0, 3)];
    for (auto& c : t) c = "acgt"[uniform_int(rng, 0, 3)];
    const Sequence a(s), b(t);
    for (auto _ : state) benchmark::DoNotOptimize(edit_distance(a, b));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_EditDistance)->RangeMultiplier(2)->Range(64, 2048)->Complexity(benchmark::oNSquared);

void BM_OptimalAlign(benchmark::State& state) {
    Rng rng(3);
    std::string s(static_cast<std::size_t>(state.range(0)), 'a'), t = s;
    for (auto& c : s) c = "acgt"[uniform_int(rng, 0, 3)];
    for (auto& c : t) c = "acgt"[uniform_int(rng, 0, 3)];
    const Sequence a(s), b(t);
    for (auto _ : state) benchmark::DoNotOptimize(optimal_align(a, b));
}
BENCHMARK(BM_OptimalAlign)->Arg(100)->Arg(500);

void BM_LiDistance(benchmark::State& state) {
    Rng rng(4);
    const int k = static_cast<int>(state.range(1));
    const auto a = random_symbols(rng, static_cast<std::size_t>(state.range(0)), k);
    const auto b = random_symbols(rng, a.size(), k);
    for (auto _ : state) benchmark::DoNotOptimize(li_distance(a, b, k));
}
BENCHMARK(BM_LiDistance)->Args({100, 4})->Args({1000, 8})->Args({1000, 32});

void BM_SymNormalizeSort(benchmark::State& state) {
    Rng rng(5);
    std::vector<double> x(static_cast<std::size_t>(state.range(0))), y(x.size());
    for (auto& v : x) v = unit_real(rng);
    for (auto& v : y) v = unit_real(rng);
    const RealVector a(x), b(y);
    for (auto _ : state) benchmark::DoNotOptimize(sym_normalize_real(a, b));
}
BENCHMARK(BM_SymNormalizeSort)->Arg(16)->Arg(256)->Arg(4096);

void BM_SymNormalizeAssignment(benchmark::State& state) {
    Rng rng(6);
    std::vector<double> x(static_cast<std::size_t>(state.range(0))), y(x.size());
    for (auto& v : x) v = unit_real(rng);
    for (auto& v : y) v = unit_real(rng);
    const RealVector a(x), b(y);
    for (auto _ : state) benchmark::DoNotOptimize(sym_normalize_real_assignment(a, b));
}
BENCHMARK(BM_SymNormalizeAssignment)->Arg(16)->Arg(64);

void BM_GraphExact(benchmark::State& state) {
    Rng rng(7);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_graph(rng, n), b = random_graph(rng, n);
    for (auto _ : state) benchmark::DoNotOptimize(graph_quotient_distance_exact(a, b));
}
BENCHMARK(BM_GraphExact)->DenseRange(5, 8);

void BM_GraphHeuristic(benchmark::State& state) {
    Rng rng(8);
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_graph(rng, n), b = random_graph(rng, n);
    for (auto _ : state) benchmark::DoNotOptimize(graph_match_heuristic(a, b, 10, rng));
}
BENCHMARK(BM_GraphHeuristic)->Arg(10)->Arg(30)->Arg(60);

} // namespace

BENCHMARK_MAIN();
