#include <benchmark/benchmark.h>

#include <genlambda/modpoly.hpp>
#include <genlambda/util.hpp>

using namespace genlambda;

namespace {

QSeries dense_series(int n, long order, long prec, std::uint64_t salt) {
    std::vector<CycNum> c;
    Rng rng(salt);
    for (long e = order; e < prec; ++e) {
        std::vector<Rational> row;
        for (int i = 0; i < euler_phi(n); ++i)
            row.push_back(make_rational(rng.range(-9, 9)));
        c.push_back(CycNum::from_coeffs(n, std::move(row)));
    }
    return QSeries(n, order, std::move(c), prec);
}

void BM_CycMul(benchmark::State& state) {
    int n = static_cast<int>(state.range(0));
    Rng rng(1);
    std::vector<Rational> a, b;
    for (int i = 0; i < euler_phi(n); ++i) {
        a.push_back(make_rational(rng.range(-99, 99), rng.range(1, 7)));
        b.push_back(make_rational(rng.range(-99, 99), rng.range(1, 7)));
    }
    CycNum x = CycNum::from_coeffs(n, a), y = CycNum::from_coeffs(n, b);
    for (auto _ : state) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_CycMul)->Arg(5)->Arg(7)->Arg(12);

void BM_SeriesMul(benchmark::State& state) {
    long len = state.range(0);
    QSeries f = dense_series(5, 0, len, 2);
    QSeries g = dense_series(5, 0, len, 3);
    for (auto _ : state) benchmark::DoNotOptimize(f * g);
}
BENCHMARK(BM_SeriesMul)->Arg(50)->Arg(100)->Arg(200);

void BM_LambdaSeries(benchmark::State& state) {
    for (auto _ : state)
        benchmark::DoNotOptimize(lambda_k_series(5, 2, state.range(0)));
}
BENCHMARK(BM_LambdaSeries)->Arg(50)->Arg(100)->Arg(200);

void BM_ESeries(benchmark::State& state) {
    long p = state.range(0);
    for (auto _ : state)
        benchmark::DoNotOptimize(e_series_raw(IndexPair(12, 1, 5), p));
}
BENCHMARK(BM_ESeries)->Arg(100)->Arg(400);

void BM_LambdaComposed(benchmark::State& state) {
    SL2Mat a(2, 1, 1, 1);
    for (auto _ : state)
        benchmark::DoNotOptimize(lambda_composed(static_cast<int>(state.range(0)), 1, a, 100));
}
BENCHMARK(BM_LambdaComposed)->Arg(5)->Arg(12);

void BM_JSeries(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(j_qtilde_coeffs(state.range(0)));
}
BENCHMARK(BM_JSeries)->Arg(64)->Arg(256);

void BM_PsiLevel2(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(psi_poly(2, 1));
}
BENCHMARK(BM_PsiLevel2);

}  // namespace

BENCHMARK_MAIN();
