#include "geoint/config.hpp"
#include "geoint/geodesic.hpp"
#include "geoint/orbits.hpp"
#include "geoint/series.hpp"

#include <benchmark/benchmark.h>

#include <string>

namespace {

using namespace geoint;

const FFormContext& context() {
    static const FFormContext ctx = build_context(load_config(std::string(GEOINT_CONFIG_DIR) + "/disc15_maximal.json"));
    return ctx;
}

void BM_EnumerateOrbits(benchmark::State& state) {
    const auto& ctx = context();
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_orbits(state.range(0), ctx));
}
BENCHMARK(BM_EnumerateOrbits)->Arg(10)->Arg(25)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_Canonicalize(benchmark::State& state) {
    const auto& ctx = context();
    auto orbits = enumerate_orbits(30, ctx);
    Quaternion b = unit_translate(ctx, orbits.front().b, 3, -2);
    for (auto _ : state) benchmark::DoNotOptimize(canonicalize(ctx, b));
}
BENCHMARK(BM_Canonicalize);

void BM_Varsigma(benchmark::State& state) {
    const auto& ctx = context();
    auto orbits = enumerate_orbits(30, ctx);
    for (auto _ : state)
        for (const auto& o : orbits) benchmark::DoNotOptimize(ctx.varsigma(o.b));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(orbits.size()));
}
BENCHMARK(BM_Varsigma);

void BM_Crossing(benchmark::State& state) {
    const auto& ctx = context();
    GeodesicOracle oracle(ctx);
    auto orbits = enumerate_orbits(30, ctx);
    for (auto _ : state)
        for (const auto& o : orbits) benchmark::DoNotOptimize(oracle.crossing(o.b));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(orbits.size()));
}
BENCHMARK(BM_Crossing);

void BM_Report(benchmark::State& state) {
    const auto& ctx = context();
    for (auto _ : state) benchmark::DoNotOptimize(report(ctx, state.range(0), Method::both, {}, 1));
}
BENCHMARK(BM_Report)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
