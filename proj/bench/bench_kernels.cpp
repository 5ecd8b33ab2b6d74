#include "abp/analysis.hpp"
#include "abp/exact/const_expr.hpp"
#include "abp/kernels.hpp"

#include <benchmark/benchmark.h>

using namespace abp;

namespace {

const AlmostBeattyPartition& golden_thm1()
{
    static const AlmostBeattyPartition p = build_theorem1(DensityTriple(
        exact::parse_constant("1/phi^3"), exact::parse_constant("1/phi^4"), exact::parse_constant("1/phi")));
    return p;
}

const AlmostBeattyPartition& tribonacci_thm3()
{
    static const AlmostBeattyPartition p = build_theorem3(DensityTriple(exact::parse_constant("1/tribonacci^3"),
                                                                        exact::parse_constant("1/tribonacci^2"),
                                                                        exact::parse_constant("1/tribonacci")));
    return p;
}

void BM_VerifySerial(benchmark::State& state)
{
    const auto& p = golden_thm1();
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::verify_serial(p, state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_VerifyParallel(benchmark::State& state)
{
    const auto& p = golden_thm1();
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::verify_parallel(p, state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RegionScanSerial(benchmark::State& state)
{
    const auto& p = tribonacci_thm3();
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::region_scan_serial(p, state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RegionScanParallel(benchmark::State& state)
{
    const auto& p = tribonacci_thm3();
    for (auto _ : state)
        benchmark::DoNotOptimize(kernels::region_scan_parallel(p, state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_DensitiesSerial(benchmark::State& state)
{
    const auto& p = tribonacci_thm3();
    for (auto _ : state)
        benchmark::DoNotOptimize(empirical_densities(p, state.range(0), false));
}

void BM_DensitiesParallel(benchmark::State& state)
{
    const auto& p = tribonacci_thm3();
    for (auto _ : state)
        benchmark::DoNotOptimize(empirical_densities(p, state.range(0), true));
}

} // namespace

BENCHMARK(BM_VerifySerial)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_VerifyParallel)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegionScanSerial)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RegionScanParallel)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DensitiesSerial)->Arg(1000000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DensitiesParallel)->Arg(1000000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
