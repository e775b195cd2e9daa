#include <benchmark/benchmark.h>

#include "hncomb/coneorder.hpp"
#include "hncomb/langlands.hpp"
#include "hncomb/sampling.hpp"
#include "hncomb/strata.hpp"
#include "hncomb/vanishing.hpp"

using namespace hncomb;

namespace {

const GroupData& group_for(int rank) {
    static const GroupData groups[] = {
        build_group(parse_group_spec("A1")),
        build_group(parse_group_spec("A2")),
        build_group(parse_group_spec("A3")),
        build_group(parse_group_spec("B4")),
    };
    return groups[rank - 1];
}

void BM_EnumerateRootsE8(benchmark::State& state) {
    const auto g = build_group(parse_group_spec("E8"));
    for (auto _ : state) {
        auto roots = enumerate_roots(g);
        benchmark::DoNotOptimize(roots);
    }
}
BENCHMARK(BM_EnumerateRootsE8);

void BM_Retract(benchmark::State& state) {
    const auto& g = group_for(static_cast<int>(state.range(0)));
    Sampler sampler(1);
    std::vector<Coweight> inputs;
    for (int i = 0; i < 64; ++i)
        inputs.push_back(sampler.coweight(g));
    std::size_t next = 0;
    for (auto _ : state) {
        auto result = retract(g, inputs[next++ % inputs.size()]);
        benchmark::DoNotOptimize(result);
    }
}
BENCHMARK(BM_Retract)->DenseRange(1, 4);

void BM_EmptyIntersection(benchmark::State& state) {
    const auto& g = group_for(static_cast<int>(state.range(0)));
    Sampler sampler(2);
    const auto theta = sampler.dominant(g);
    const auto lam = sampler.dominant(g);
    const auto gamma_m = sampler.subset(g.rank);
    for (auto _ : state) {
        auto cert = empty_intersection(g, theta, lam, gamma_m);
        benchmark::DoNotOptimize(cert);
    }
}
BENCHMARK(BM_EmptyIntersection)->DenseRange(1, 4);

void BM_EnumerateCandidates(benchmark::State& state) {
    const auto g = build_group(parse_group_spec("A2"));
    const auto theta = parse_coweight("3,3", g);
    for (auto _ : state) {
        auto candidates = enumerate_candidates(g, theta);
        benchmark::DoNotOptimize(candidates);
    }
}
BENCHMARK(BM_EnumerateCandidates);

void BM_MinimalConstantsF4(benchmark::State& state) {
    const auto g = build_group(parse_group_spec("F4"));
    StrangenessTable table;
    table.genus = 2;
    for (auto _ : state) {
        auto constants = minimal_constants(g, table);
        benchmark::DoNotOptimize(constants);
    }
}
BENCHMARK(BM_MinimalConstantsF4);

}  // namespace

BENCHMARK_MAIN();
