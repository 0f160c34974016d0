/// Microbenchmarks for the evaluation and search primitives. These measure
/// the hot paths; run with --benchmark_min_time=... for tighter numbers.

#include <benchmark/benchmark.h>

#include <vector>

#include "bfoqap/delta_table.hpp"
#include "bfoqap/evaluate.hpp"
#include "bfoqap/io.hpp"
#include "bfoqap/pareto.hpp"
#include "bfoqap/rng.hpp"
#include "bfoqap/tabu.hpp"
#include "bfoqap/variation.hpp"

namespace {

using namespace bfoqap;

SquareMatrix random_matrix(int n, RandomSource& rng) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m(i, j) = rng.uniform_int(0, 99);
    }
    return m;
}

QapInstance make_instance(int n) {
    RandomSource rng(static_cast<std::uint64_t>(n));
    return QapInstance{random_matrix(n, rng), random_matrix(n, rng)};
}

void bm_evaluate(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const QapInstance inst = make_instance(n);
    RandomSource rng(1);
    const Permutation phi = Permutation::random(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(evaluate(inst, phi));
    }
    state.SetComplexityN(n);
}
BENCHMARK(bm_evaluate)->Arg(20)->Arg(50)->Arg(128)->Complexity(benchmark::oNSquared);

void bm_delta_swap(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const QapInstance inst = make_instance(n);
    RandomSource rng(2);
    const Permutation phi = Permutation::random(n, rng);
    int r = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(delta_swap(inst, phi, r, n - 1));
        r = (r + 1) % (n - 1);
    }
    state.SetComplexityN(n);
}
BENCHMARK(bm_delta_swap)->Arg(20)->Arg(50)->Arg(128)->Complexity(benchmark::oN);

void bm_delta_table_apply(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const QapInstance inst = make_instance(n);
    RandomSource rng(3);
    DeltaTable table(inst, Permutation::random(n, rng));
    int r = 0;
    for (auto _ : state) {
        table.apply_swap(r, n - 1);
        r = (r + 1) % (n - 1);
    }
    state.SetComplexityN(n);
}
BENCHMARK(bm_delta_table_apply)->Arg(20)->Arg(50)->Arg(128)->Complexity(benchmark::oNSquared);

void bm_tabu_iteration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const QapInstance inst = make_instance(n);
    RandomSource rng(4);
    TabuParams params;
    params.max_iters = 50;
    for (auto _ : state) {
        const Permutation start = Permutation::random(n, rng);
        benchmark::DoNotOptimize(tabu_improve(inst, start, params, rng));
    }
    state.SetItemsProcessed(state.iterations() * 50);
}
BENCHMARK(bm_tabu_iteration)->Arg(20)->Arg(50);

void bm_nondominated_sort(benchmark::State& state) {
    const int count = static_cast<int>(state.range(0));
    RandomSource rng(5);
    std::vector<ObjectiveVector> pool;
    pool.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        pool.push_back({rng.uniform_int(0, 10000), rng.uniform_int(0, 10000)});
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(fast_nondominated_sort(pool));
    }
}
BENCHMARK(bm_nondominated_sort)->Arg(100)->Arg(250)->Arg(500);

void bm_crossover_ulx(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    RandomSource rng(6);
    const Permutation a = Permutation::random(n, rng);
    const Permutation b = Permutation::random(n, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(crossover_ulx(a, b, rng));
    }
}
BENCHMARK(bm_crossover_ulx)->Arg(20)->Arg(50)->Arg(128);

void bm_archive_insert(benchmark::State& state) {
    const int n = 10;
    RandomSource rng(7);
    for (auto _ : state) {
        state.PauseTiming();
        std::vector<FrontPoint> points;
        for (int i = 0; i < 500; ++i) {
            points.push_back(FrontPoint{{rng.uniform_int(0, 5000), rng.uniform_int(0, 5000)},
                                        Permutation::random(n, rng)});
        }
        ParetoArchive archive(2);
        state.ResumeTiming();
        for (FrontPoint& p : points) {
            archive.insert(std::move(p.objectives), std::move(p.assignment));
        }
        benchmark::DoNotOptimize(archive.size());
    }
    state.SetItemsProcessed(state.iterations() * 500);
}
BENCHMARK(bm_archive_insert);

}  // namespace

BENCHMARK_MAIN();
