#include <benchmark/benchmark.h>

#include "flatinv/descriptor_io.hpp"
#include "flatinv/manifold.hpp"
#include "flatinv/presentation.hpp"

#include <string>

namespace {

const std::string kC2Model =
    "< t1,t2,t3,al | [t1,t2], [t1,t3], [t2,t3], al^2 = t1, al*t2*al^-1 = t2^-1, "
    "al*t3*al^-1 = t3^-1 >";

const std::string kCase5Json = R"({
  "schema": 1, "label": "ab-z2-case5", "nilpotency_class": 2,
  "orientable": true, "spin": false,
  "underlying": { "presentation": "< t1, t2, t3, al | [t1,t2], [t1,t3], [t2,t3], al^2 = t1, al*t2*al^-1 = t2^-1, al*t3*al^-1 = t3^-1 >" }
})";

void BM_ParsePresentation(benchmark::State& state) {
    for (auto _ : state) {
        auto p = flatinv::parse_presentation(kC2Model);
        benchmark::DoNotOptimize(p);
    }
}
BENCHMARK(BM_ParsePresentation);

void BM_AbelianInvariants(benchmark::State& state) {
    const auto p = flatinv::parse_presentation(kC2Model);
    for (auto _ : state) {
        auto inv = flatinv::abelian_invariants(p);
        benchmark::DoNotOptimize(inv);
    }
}
BENCHMARK(BM_AbelianInvariants);

void BM_AnalyzeCase5(benchmark::State& state) {
    const auto descriptor = flatinv::descriptor_from_json_text(kCase5Json);
    for (auto _ : state) {
        auto report = flatinv::analyze(descriptor);
        benchmark::DoNotOptimize(report);
    }
}
BENCHMARK(BM_AnalyzeCase5);

void BM_DescriptorParse(benchmark::State& state) {
    for (auto _ : state) {
        auto d = flatinv::descriptor_from_json_text(kCase5Json);
        benchmark::DoNotOptimize(d);
    }
}
BENCHMARK(BM_DescriptorParse);

} // namespace
