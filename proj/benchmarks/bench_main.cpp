#include <benchmark/benchmark.h>

#include <optional>
#include <vector>

#include "pafp/pafp.hpp"

using namespace pafp;

namespace {

// Random DAG of n vertices: arcs forward along 1..n with probability p.
PafpInstance random_dag(int n, double p, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Arc> arcs;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v)
            if (rng.chance(p)) arcs.push_back({u, v});
    std::vector<VertexPair> pairs;
    for (int i = 0; i < n / 3; ++i) {
        Vertex u = rng.range(1, n - 1);
        Vertex v = rng.range(u + 1, n);
        pairs.push_back({u, v});
    }
    return make_instance(n, arcs, 1, n, pairs);
}

}  // namespace

static void BM_LayerProfile(benchmark::State& state) {
    PafpInstance inst = random_dag(static_cast<int>(state.range(0)), 0.3, 11);
    for (auto _ : state)
        benchmark::DoNotOptimize(layer_profile(inst.graph, inst.source));
}
BENCHMARK(BM_LayerProfile)->Arg(32)->Arg(128)->Arg(512);

static void BM_UnionDigraph(benchmark::State& state) {
    PafpInstance inst = random_dag(static_cast<int>(state.range(0)), 0.3, 12);
    for (auto _ : state)
        benchmark::DoNotOptimize(union_digraph(inst));
}
BENCHMARK(BM_UnionDigraph)->Arg(32)->Arg(128)->Arg(512);

static void BM_Normalize(benchmark::State& state) {
    PafpInstance inst = random_dag(static_cast<int>(state.range(0)), 0.3, 13);
    for (auto _ : state)
        benchmark::DoNotOptimize(normalize(inst));
}
BENCHMARK(BM_Normalize)->Arg(16)->Arg(64)->Arg(256);

static void BM_TwoSat(benchmark::State& state) {
    Rng rng(14);
    TwoSatFormula f;
    f.var_count = static_cast<int>(state.range(0));
    for (int c = 0; c < 3 * f.var_count; ++c)
        f.add_clause({rng.range(0, f.var_count - 1), rng.chance(0.5)},
                     {rng.range(0, f.var_count - 1), rng.chance(0.5)});
    for (auto _ : state)
        benchmark::DoNotOptimize(solve(f));
}
BENCHMARK(BM_TwoSat)->Arg(64)->Arg(1024)->Arg(16384);

static void BM_SolveElw2(benchmark::State& state) {
    int len = static_cast<int>(state.range(0));
    PafpInstance lad = gen_ladder(len, 0.8, 15);
    Rng rng(16);
    std::vector<VertexPair> pairs;
    int n = lad.graph.vertex_count();
    for (int i = 0; i < len / 2; ++i) {
        Vertex u = rng.range(1, n - 1);
        Vertex v = rng.range(u + 1, n);
        pairs.push_back({u, v});
    }
    PafpInstance inst = make_instance(n, lad.graph.arcs(), lad.source, lad.target, pairs);
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_elw2(inst));
}
BENCHMARK(BM_SolveElw2)->Arg(8)->Arg(32)->Arg(128);

static void BM_SolveBfsw2k(benchmark::State& state) {
    int k = static_cast<int>(state.range(0));
    PafpInstance base = gen_backward_augmented(12, k, 3);
    // Forbidding {source, target} blocks every path, so the sweep visits all
    // 2^k subsets: worst-case cost, not first-hit luck.
    PafpInstance inst = make_instance(base.graph.vertex_count(), base.graph.arcs(),
                                      base.source, base.target,
                                      {{base.source, base.target}});
    Bfsw2kOptions opts;
    opts.threads = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_bfsw2k(inst, opts));
}
BENCHMARK(BM_SolveBfsw2k)
    ->Args({2, 1})
    ->Args({6, 1})
    ->Args({10, 1})
    ->Args({10, 4});

static void BM_Oracle(benchmark::State& state) {
    // Full ladder with the last rung forbidden: exhaustive search must walk
    // all 2^(len-1) paths before answering NO.
    int len = static_cast<int>(state.range(0));
    PafpInstance lad = gen_ladder(len, std::nullopt, 0);
    PafpInstance inst = make_instance(lad.graph.vertex_count(), lad.graph.arcs(),
                                      lad.source, lad.target,
                                      {{lad.source, lad.target}});
    for (auto _ : state)
        benchmark::DoNotOptimize(solve_exact(inst));
}
BENCHMARK(BM_Oracle)->Arg(8)->Arg(12)->Arg(16);

BENCHMARK_MAIN();
