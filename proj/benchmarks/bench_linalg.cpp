#include <benchmark/benchmark.h>

#include "flatinv/normal_form.hpp"

#include <random>

namespace {

using flatinv::IntMatrix;

IntMatrix fixed_random(std::size_t n, long lo, long hi, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> dist(lo, hi);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = dist(rng);
    return m;
}

void BM_SmithNormalForm(benchmark::State& state) {
    const IntMatrix a = fixed_random(static_cast<std::size_t>(state.range(0)), -10, 10, 42);
    for (auto _ : state) {
        auto snf = flatinv::smith_normal_form(a);
        benchmark::DoNotOptimize(snf.divisors);
    }
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(6)->Arg(8);

void BM_HermiteNormalForm(benchmark::State& state) {
    const IntMatrix a = fixed_random(static_cast<std::size_t>(state.range(0)), -10, 10, 43);
    for (auto _ : state) {
        auto hnf = flatinv::hermite_normal_form(a);
        benchmark::DoNotOptimize(hnf.h);
    }
}
BENCHMARK(BM_HermiteNormalForm)->Arg(4)->Arg(8);

void BM_Determinant(benchmark::State& state) {
    const IntMatrix a = fixed_random(static_cast<std::size_t>(state.range(0)), -10, 10, 44);
    for (auto _ : state) {
        auto det = flatinv::determinant(a);
        benchmark::DoNotOptimize(det);
    }
}
BENCHMARK(BM_Determinant)->Arg(4)->Arg(8);

void BM_KernelBasis(benchmark::State& state) {
    // rank-deficient: product of 8x3 and 3x8 blocks
    const IntMatrix left = fixed_random(8, -3, 3, 45);
    IntMatrix tall(8, 3), wide(3, 8);
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            tall(i, j) = left(i, j);
            wide(j, i) = left(j, i);
        }
    const IntMatrix a = tall * wide;
    for (auto _ : state) {
        auto basis = flatinv::kernel_basis(a);
        benchmark::DoNotOptimize(basis);
    }
}
BENCHMARK(BM_KernelBasis);

} // namespace
