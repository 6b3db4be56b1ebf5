#include "pseudotri/cluster.hpp"
#include "pseudotri/coxeter.hpp"
#include "pseudotri/matchings.hpp"

#include <benchmark/benchmark.h>

#include <numeric>

using namespace ptri;

static void BM_Enumerate(benchmark::State& st)
{
    Dn d(static_cast<int>(st.range(0)));
    for (auto _ : st)
        benchmark::DoNotOptimize(enumerate(d).nodes.size());
}
BENCHMARK(BM_Enumerate)->DenseRange(3, 7)->Unit(benchmark::kMillisecond);

static void BM_AllVariables(benchmark::State& st)
{
    Dn d(static_cast<int>(st.range(0)));
    Seed s = initial_seed(d, star(d, Side::A));
    for (auto _ : st)
        benchmark::DoNotOptimize(all_cluster_variables(d, s).seeds);
}
BENCHMARK(BM_AllVariables)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_AllVariablesParallel(benchmark::State& st)
{
    Dn d(6);
    Seed s = initial_seed(d, star(d, Side::A));
    for (auto _ : st)
        benchmark::DoNotOptimize(all_cluster_variables(d, s, static_cast<int>(st.range(0))).seeds);
}
BENCHMARK(BM_AllVariablesParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

static void BM_MatchingSums(benchmark::State& st)
{
    Dn d(static_cast<int>(st.range(0)));
    Seed s = initial_seed(d, central_seed(d, 0));
    auto os = openings(d, s);
    for (auto _ : st)
        for (int p = 0; p < d.pair_count(); ++p)
            benchmark::DoNotOptimize(variable_via_matching(d, s, os, p).x.size());
}
BENCHMARK(BM_MatchingSums)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

static void BM_FacetChecks(benchmark::State& st)
{
    int n = static_cast<int>(st.range(0));
    Dn d(n);
    std::vector<int> c(n);
    std::iota(c.begin(), c.end(), 0);
    SubwordComplex sc(d, c);
    std::vector<int> I(n);
    std::iota(I.begin(), I.end(), 1);
    for (auto _ : st)
        benchmark::DoNotOptimize(sc.facet_check(I));
}
BENCHMARK(BM_FacetChecks)->DenseRange(3, 8);

BENCHMARK_MAIN();
