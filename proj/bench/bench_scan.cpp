// Serial reference vs OpenMP kernels for the two hot scans:
// the (n, m) window max behind the decay norms and the x grid max behind the
// Bernstein sup-norm checks.
#include <benchmark/benchmark.h>
#include <omp.h>

#include <cmath>

#include "lagdisp/dispersion.hpp"
#include "lagdisp/polynomials.hpp"
#include "lagdisp/scan.hpp"

using namespace lagdisp;

namespace {

scan::WindowSpec window(int N) {
    scan::WindowSpec s;
    const double t = 3.0;
    s.alpha = 1.5;
    s.u = 1.0 / (1.0 + t * t);
    s.v = t * t / (1.0 + t * t);
    s.N = N;
    s.log_w = WeightSeq::sigma(1.5).log_table(N);
    return s;
}

void BM_window_serial(benchmark::State& st) {
    const auto s = window(static_cast<int>(st.range(0)));
    for (auto _ : st) benchmark::DoNotOptimize(scan::serial::window_max(s));
    st.SetComplexityN(st.range(0));
}

void BM_window_omp(benchmark::State& st) {
    const auto s = window(static_cast<int>(st.range(0)));
    omp_set_num_threads(static_cast<int>(st.range(1)));
    for (auto _ : st) benchmark::DoNotOptimize(scan::omp::window_max(s));
    st.counters["threads"] = static_cast<double>(st.range(1));
}

// (1-x^2)^{1/4} |P_n^{(2,1)}(x)|, the shape of every named-bound scan
auto weighted(int n) {
    return [n](double x) { return std::pow(1.0 - x * x, 0.25) * std::abs(jacobi_P(n, 2.0, 1.0, x)); };
}

void BM_grid_serial(benchmark::State& st) {
    const auto xs = scan::chebyshev_grid(static_cast<int>(st.range(0)));
    const auto f = weighted(100);
    for (auto _ : st) benchmark::DoNotOptimize(scan::serial::grid_max(xs, f));
}

void BM_grid_omp(benchmark::State& st) {
    const auto xs = scan::chebyshev_grid(static_cast<int>(st.range(0)));
    const auto f = weighted(100);
    omp_set_num_threads(static_cast<int>(st.range(1)));
    for (auto _ : st) benchmark::DoNotOptimize(scan::omp::grid_max(xs, f));
    st.counters["threads"] = static_cast<double>(st.range(1));
}

}  // namespace

BENCHMARK(BM_window_serial)->Arg(256)->Arg(1024)->Arg(4096)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_window_omp)
    ->ArgsProduct({{256, 1024, 4096}, {1, 2, 4, 8}})
    ->Unit(benchmark::kMillisecond)
    ->UseRealTime();
BENCHMARK(BM_grid_serial)->Arg(2001)->Arg(20001)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_grid_omp)->ArgsProduct({{2001, 20001}, {1, 2, 4, 8}})->Unit(benchmark::kMicrosecond)->UseRealTime();

BENCHMARK_MAIN();
