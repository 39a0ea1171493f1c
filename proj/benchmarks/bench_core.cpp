#include <benchmark/benchmark.h>

#include "tdhom/canonical.hpp"
#include "tdhom/decomposed.hpp"
#include "tdhom/enumerate.hpp"
#include "tdhom/games.hpp"
#include "tdhom/graph.hpp"
#include "tdhom/homcount.hpp"
#include "tdhom/restricted.hpp"
#include "tdhom/tree_depth.hpp"

namespace {

using namespace tdhom;

ColorPalette mono() { return ColorPalette({"white"}); }

Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(mono(), std::vector<int>(static_cast<std::size_t>(n), 0), std::move(edges));
}

Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(mono(), std::vector<int>(static_cast<std::size_t>(n), 0), std::move(edges));
}

Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(mono(), std::vector<int>(static_cast<std::size_t>(n), 0), std::move(edges));
}

void BM_CanonicalKey6(benchmark::State& state) {
    const Graph g = cycle(6);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_key(g));
}
BENCHMARK(BM_CanonicalKey6);

void BM_HomBrute_P5_K4(benchmark::State& state) {
    const Graph f = path(5);
    const Graph g = complete(4);
    for (auto _ : state) benchmark::DoNotOptimize(hom_count(f, g));
}
BENCHMARK(BM_HomBrute_P5_K4);

void BM_HomTreeDP_P5_K4(benchmark::State& state) {
    const Decomposed d = make_decomposed(path(5));
    const Graph g = complete(4);
    for (auto _ : state) benchmark::DoNotOptimize(hom_count_td(d, g));
}
BENCHMARK(BM_HomTreeDP_P5_K4);

void BM_Partitions_C6_2K3(benchmark::State& state) {
    const Graph c6 = cycle(6);
    Graph t2k3(mono(), std::vector<int>(6, 0),
               {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    for (auto _ : state) benchmark::DoNotOptimize(ck_partitions(c6, t2k3, 3));
}
BENCHMARK(BM_Partitions_C6_2K3);

void BM_ShrinkImages_P4(benchmark::State& state) {
    const Decomposed d = make_decomposed(path(4));
    for (auto _ : state) benchmark::DoNotOptimize(shrink_images(d));
}
BENCHMARK(BM_ShrinkImages_P4);

void BM_TreeDepthWitness_C6(benchmark::State& state) {
    const Graph g = cycle(6);
    for (auto _ : state) benchmark::DoNotOptimize(tree_depth(g));
}
BENCHMARK(BM_TreeDepthWitness_C6);

} // namespace

BENCHMARK_MAIN();
