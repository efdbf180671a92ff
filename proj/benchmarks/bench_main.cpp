#include <benchmark/benchmark.h>

#include "lrb/branching.hpp"
#include "lrb/genexp.hpp"
#include "lrb/lr.hpp"
#include "lrb/oracle.hpp"
#include "lrb/separation.hpp"

using namespace lrb;

static void BM_LrEnumerate(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(enumerate_lr({6, 5, 4, 3, 2}, {4, 3, 2}, {4, 3, 2, 1, 1}, LrKind::LATTICE));
}
BENCHMARK(BM_LrEnumerate);

static void BM_LrBrute(benchmark::State& st) {
    for (auto _ : st) benchmark::DoNotOptimize(oracle::lr_brute({6, 5, 4, 3, 2}, {4, 3, 2}, {4, 3, 2, 1, 1}));
}
BENCHMARK(BM_LrBrute);

// method as the argument: 1 direct, 2 barred, 4 flagged
static void BM_Branching(benchmark::State& st) {
    BranchingQuery q{8, {5, 4, 4, 3, 2, 2}, {2, 2, 2, 1, 1}, Group::O};
    auto m = static_cast<Method>(st.range(0));
    for (auto _ : st) benchmark::DoNotOptimize(multiplicity_value(q, m));
}
BENCHMARK(BM_Branching)->Arg(DIRECT)->Arg(BARRED)->Arg(FLAGGED)->Unit(benchmark::kMillisecond);

static void BM_BranchingByRank(benchmark::State& st) {
    int n = (int)st.range(0);
    for (auto _ : st) {
        long long s = 0;
        for (auto& lam : partitions_of(8, n)) s += multiplicity_value({n, lam, {2, 1}, Group::O}, FLAGGED);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_BranchingByRank)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_Separate(benchmark::State& st) {
    SpinorElement e{8, {4, 3, 3, 2},
                    {TwoColumn{Kind::T, 4, {1, 3, 4, 5}, {1, 2}}, TwoColumn{Kind::T, 3, {1, 3, 4}, {1, 2}},
                     TwoColumn{Kind::T, 3, {1, 5, 6}, {1, 4}}, TwoColumn{Kind::T, 2, {1, 2, 3, 5}, {1, 2, 3, 4}}}};
    for (auto _ : st) benchmark::DoNotOptimize(separate(e));
}
BENCHMARK(BM_Separate);

static void BM_SeparateAudited(benchmark::State& st) {
    SpinorElement e{9, {4, 3, 3, 2, 1},
                    {TwoColumn{Kind::T, 4, {1, 3, 4, 5}, {1, 2}}, TwoColumn{Kind::T, 3, {1, 3, 4}, {1, 2}},
                     TwoColumn{Kind::T, 3, {1, 5, 6}, {1, 4}}, TwoColumn{Kind::T, 2, {1, 2, 3, 7}, {1, 2, 3, 6}},
                     TwoColumn{Kind::SP_MINUS, 0, {1, 2, 3, 4, 5}, {}}}};
    for (auto _ : st) {
        SlideAudit a;
        benchmark::DoNotOptimize(separate(e, -1, &a));
    }
}
BENCHMARK(BM_SeparateAudited);

static void BM_GenexpEven(benchmark::State& st) {
    int m = (int)st.range(0);
    for (auto _ : st) benchmark::DoNotOptimize(K_so_even({2, 1, 1}, m));
}
BENCHMARK(BM_GenexpEven)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

static void BM_LusztigOracle(benchmark::State& st) {
    int m = (int)st.range(0);
    for (auto _ : st) benchmark::DoNotOptimize(oracle::lusztig_zero_weight(oracle::RootType::D, m, {2, 1, 1}));
}
BENCHMARK(BM_LusztigOracle)->DenseRange(3, 4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
