#include <benchmark/benchmark.h>

#include "hooklab/catalog.hpp"
#include "hooklab/etamake.hpp"
#include "hooklab/expr.hpp"
#include "hooklab/trees.hpp"

using namespace hooklab;

namespace {

WeightTable numeric_table(int size) {
    WeightTable w;
    for (int h = 1; h <= size; ++h)
        w.values.push_back(RatFun(Rational(h % 3 == 0 ? -1 : 1, (h % 4) + 1)));
    return w;
}

void bm_partition_hookgen_numeric(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const WeightTable rho = numeric_table(n);
    for (auto _ : state) benchmark::DoNotOptimize(partition_hookgen(rho, n));
}
BENCHMARK(bm_partition_hookgen_numeric)->Arg(12)->Arg(18)->Arg(24);

void bm_partition_hookexp(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const TruncSeries f = expr::eval_series("1/(1-x)", n, {});
    for (auto _ : state) benchmark::DoNotOptimize(partition_hookexp(f, n));
}
BENCHMARK(bm_partition_hookexp)->Arg(8)->Arg(16);

void bm_binary_hookgen_symbolic(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const RatFun z = RatFun::variable("z");
    WeightTable rho;
    for (int h = 1; h <= n; ++h)
        rho.values.push_back((z + RatFun(Rational(h))) / (z.scaled_by(Rational(2)) + RatFun(Rational(h))));
    for (auto _ : state) benchmark::DoNotOptimize(binary_hookgen(rho, n));
}
BENCHMARK(bm_binary_hookgen_symbolic)->Arg(12)->Arg(20);

void bm_series_pow_symbolic(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const TruncSeries base = expr::eval_series("(1-sqrt(1-4*x))/(2*x)", n, {});
    const RatFun z = RatFun::variable("z");
    for (auto _ : state) benchmark::DoNotOptimize(series_pow(base, z));
}
BENCHMARK(bm_series_pow_symbolic)->Arg(16)->Arg(24);

void bm_euler_exponents(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    const TruncSeries f = partition_hookgen(numeric_table(n), n);
    for (auto _ : state) benchmark::DoNotOptimize(euler_exponents(f, n));
}
BENCHMARK(bm_euler_exponents)->Arg(17)->Arg(32);

void bm_verify_entry(benchmark::State& state) {
    const auto* e = catalog::find_entry("THM_5_5");
    for (auto _ : state) benchmark::DoNotOptimize(catalog::verify_entry(*e, 14));
}
BENCHMARK(bm_verify_entry);

} // namespace

BENCHMARK_MAIN();
