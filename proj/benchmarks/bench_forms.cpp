#include <benchmark/benchmark.h>

#include "flatinv/forms.hpp"

namespace {

using flatinv::IntMatrix;
using flatinv::SymForm;

// fixed unimodular scramble with entries <= 2
const IntMatrix kScramble4{{1, 0, 1, -1}, {0, 1, 1, 0}, {0, 0, 1, 1}, {0, 0, 0, -1}};

void BM_SignatureTorusForm(benchmark::State& state) {
    const SymForm t = flatinv::torus_cup_product_form();
    for (auto _ : state) {
        long s = flatinv::signature(t);
        benchmark::DoNotOptimize(s);
    }
}
BENCHMARK(BM_SignatureTorusForm);

void BM_ClassifyScrambled2H(benchmark::State& state) {
    const SymForm scrambled(
        kScramble4.transpose() * flatinv::hyperbolic(2).matrix() * kScramble4);
    for (auto _ : state) {
        auto c = flatinv::classify(scrambled);
        benchmark::DoNotOptimize(c);
    }
}
BENCHMARK(BM_ClassifyScrambled2H);

void BM_EquivalenceWitnessRank4(benchmark::State& state) {
    const SymForm reference = flatinv::hyperbolic(2);
    const SymForm scrambled(kScramble4.transpose() * reference.matrix() * kScramble4);
    for (auto _ : state) {
        auto witness = flatinv::equivalent_small(reference, scrambled, 2);
        benchmark::DoNotOptimize(witness);
    }
}
BENCHMARK(BM_EquivalenceWitnessRank4);

} // namespace
