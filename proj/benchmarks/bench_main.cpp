#include <benchmark/benchmark.h>

#include <painleve/convergence.hpp>
#include <painleve/laurent_series.hpp>
#include <painleve/painleve_test.hpp>
#include <painleve/subequation.hpp>

using namespace painleve;

namespace
{

BranchSpec branch(SeriesCase c)
{
    BranchSpec s;
    s.series_case = c;
    s.lambda = Scalar(1, 9);
    return s;
}

void BM_build_series(benchmark::State &state)
{
    const BranchSpec s = branch(state.range(1) == 0 ? SeriesCase::C165 : SeriesCase::C43);
    const int N = static_cast<int>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_series(s, N));
    }
}
BENCHMARK(BM_build_series)->ArgsProduct({{10, 20, 40, 80}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_residual_check(benchmark::State &state)
{
    const SeriesBuild b = build_series(branch(SeriesCase::C165), static_cast<int>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(residual_max(b));
    }
}
BENCHMARK(BM_residual_check)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_certify(benchmark::State &state)
{
    const SeriesBuild b = build_series(branch(SeriesCase::C165), 40);
    for (auto _ : state) {
        benchmark::DoNotOptimize(certify(b, Scalar(1, 10)));
    }
}
BENCHMARK(BM_certify)->Unit(benchmark::kMillisecond);

void BM_fit(benchmark::State &state)
{
    const SeriesBuild b = build_series(branch(SeriesCase::C43), 30);
    const int m = static_cast<int>(state.range(0));
    const PuiseuxSeries y = b.y.with_center(Scalar(0));
    const int order = available_match_order(y, m);
    for (auto _ : state) {
        benchmark::DoNotOptimize(fit(y, m, order));
    }
}
BENCHMARK(BM_fit)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_classify(benchmark::State &state)
{
    for (auto _ : state) {
        benchmark::DoNotOptimize(classify(Scalar(-16, 5), Scalar(1, 9)));
    }
}
BENCHMARK(BM_classify)->Unit(benchmark::kMicrosecond);

} // namespace
BENCHMARK_MAIN();
