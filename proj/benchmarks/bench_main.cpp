#include <benchmark/benchmark.h>

#include <random>

#include "hochkit/bar_complex.hpp"
#include "hochkit/fixtures.hpp"
#include "hochkit/hochschild.hpp"
#include "hochkit/koszul.hpp"
#include "hochkit/linalg.hpp"

using namespace hochkit;

namespace {

Matrix random_integer_matrix(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<long> dist(-9, 9);
    Matrix m(ScalarRing::integers(), n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m.set(r, c, Scalar(dist(rng)));
    }
    return m;
}

void BM_CoboundaryMatrix(benchmark::State& state) {
    const Bimodule reg = Bimodule::regular(fixtures::matrix_algebra(ScalarRing::rationals()));
    const long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(coboundary_matrix(reg, n));
}
BENCHMARK(BM_CoboundaryMatrix)->DenseRange(0, 2);

void BM_HochschildDualNumbersZ(benchmark::State& state) {
    const Bimodule reg = Bimodule::regular(fixtures::dual_numbers(ScalarRing::integers()));
    const long n = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(hochschild_cohomology(reg, n, false).invariants);
}
BENCHMARK(BM_HochschildDualNumbersZ)->DenseRange(1, 4);

void BM_HochschildByWeight(benchmark::State& state) {
    const Bimodule reg = Bimodule::regular(fixtures::truncated_free(ScalarRing::rationals()));
    for (auto _ : state) benchmark::DoNotOptimize(hochschild_cohomology_by_weight(reg, 2));
}
BENCHMARK(BM_HochschildByWeight)->Unit(benchmark::kMillisecond);

void BM_BarDifferentialColumns(benchmark::State& state) {
    const FiniteAlgebra a = fixtures::upper_triangular(ScalarRing::rationals());
    const long n = state.range(0);
    const std::size_t cols = bar_rank(a, n);
    for (auto _ : state) {
        std::size_t nnz = 0;
        for (std::size_t c = 0; c < cols; ++c) nnz += bar_differential_column(a, n, false, c).size();
        benchmark::DoNotOptimize(nnz);
    }
}
BENCHMARK(BM_BarDifferentialColumns)->DenseRange(1, 3);

void BM_SmithNormalForm(benchmark::State& state) {
    const Matrix m = random_integer_matrix(static_cast<std::size_t>(state.range(0)), 7);
    for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(4, 32);

void BM_GradedKoszulTor(benchmark::State& state) {
    const std::size_t v = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(graded_koszul_tor(v, ScalarRing::integers(), v + 1));
}
BENCHMARK(BM_GradedKoszulTor)->DenseRange(1, 4);

}  // namespace

BENCHMARK_MAIN();
