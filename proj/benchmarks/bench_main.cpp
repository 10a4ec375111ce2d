#include <benchmark/benchmark.h>

#include "swarmctl/analytic.hpp"
#include "swarmctl/experiment.hpp"
#include "swarmctl/generator.hpp"
#include "swarmctl/matching.hpp"
#include "swarmctl/verify.hpp"

using namespace swarmctl;

namespace {

void BM_SampleSsn(benchmark::State& state) {
    const NetworkSpec spec{static_cast<std::size_t>(state.range(0)), RegularDegree{static_cast<int>(state.range(1))}, 0.0, 1};
    for (auto _ : state) benchmark::DoNotOptimize(sample_ssn(spec));
    state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(1));
}
BENCHMARK(BM_SampleSsn)->Args({2000, 2})->Args({2000, 8})->Args({10000, 4});

void BM_RemoveLinks(benchmark::State& state) {
    const auto g = sample_ssn({static_cast<std::size_t>(state.range(0)), RegularDegree{4}, 0.0, 1});
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(remove_links(g, 0.5, seed++));
}
BENCHMARK(BM_RemoveLinks)->Arg(2000)->Arg(10000);

void BM_MaxMatching(benchmark::State& state) {
    const auto g = sample_ssn({static_cast<std::size_t>(state.range(0)),
                               RegularDegree{static_cast<int>(state.range(1))}, 0.0, 3});
    for (auto _ : state) benchmark::DoNotOptimize(max_matching(g));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxMatching)
    ->Args({2000, 1})
    ->Args({2000, 2})
    ->Args({2000, 8})
    ->Args({10000, 2})
    ->Args({100000, 2});

void BM_Replica(benchmark::State& state) {
    const NetworkSpec spec{2000, RegularDegree{3}, 0.2, 0};
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(simulate_replicas(spec, 1, seed++));
}
BENCHMARK(BM_Replica);

void BM_NdClosedRegular(benchmark::State& state) {
    const int k = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(nd_closed_regular(k, 0.2));
}
BENCHMARK(BM_NdClosedRegular)->Arg(1)->Arg(2)->Arg(8);

void BM_NdClosedBimodal(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(nd_closed_bimodal(2, 8, 0.25, 0.5));
}
BENCHMARK(BM_NdClosedBimodal);

void BM_DriverFractionGeneral(benchmark::State& state) {
    const auto m = DegreeModel::bimodal(4, 8, 0.5, 0.2);
    for (auto _ : state) benchmark::DoNotOptimize(driver_fraction_general(m));
}
BENCHMARK(BM_DriverFractionGeneral);

void BM_KalmanRank(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto g = sample_ssn({n, RegularDegree{2}, 0.0, 4});
    const auto sys = realize_system(g, max_matching(g).driver_nodes, 1);
    for (auto _ : state) benchmark::DoNotOptimize(kalman_rank(sys));
}
BENCHMARK(BM_KalmanRank)->Arg(12)->Arg(50);

}  // namespace
BENCHMARK_MAIN();
