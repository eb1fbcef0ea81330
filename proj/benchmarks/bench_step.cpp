#include <benchmark/benchmark.h>

#include "nnssim/dynamics.hpp"
#include "nnssim/random.hpp"
#include "nnssim/rewards.hpp"
#include "nnssim/scenarios.hpp"

using namespace nnssim;

static void BM_SamplePopulation(benchmark::State& state) {
    PopulationConfig cfg;
    cfg.n_agents = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(sample_population(cfg));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SamplePopulation)->Arg(10'000)->Arg(100'000);

static void BM_DistributeRewards(benchmark::State& state) {
    Xoshiro256StarStar rng(1);
    std::vector<NeuronState> neurons;
    for (std::int64_t i = 0; i < state.range(0); ++i) {
        neurons.push_back(NeuronState{static_cast<std::size_t>(i), NeuronStatus::Staking, rng.log_normal(10.0, 1.0),
                                      0.0, 6 + static_cast<int>(rng.uniform() * 91),
                                      static_cast<int>(rng.uniform() * 60)});
    }
    const auto governors = select_governors(neurons, MultiplierPolicy{});
    for (auto _ : state) benchmark::DoNotOptimize(distribute_rewards(governors, 3.9e6));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_DistributeRewards)->Arg(10'000);

static void BM_StepMonth(benchmark::State& state) {
    const auto profiles = sample_population(PopulationConfig{});
    const auto policy = preset("s4_hybrid");
    const auto shocks = generate_shocks(policy.horizon_months, policy.shock_std_dev, policy.shock_seed);
    // Warm up past the all-liquid first month so the step has a governor set.
    auto warm = step_month(genesis(profiles, policy), profiles, shocks).world;
    for (auto _ : state) {
        benchmark::DoNotOptimize(step_month(warm, profiles, shocks));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(profiles.size()));
}
BENCHMARK(BM_StepMonth)->Unit(benchmark::kMicrosecond);

static void BM_FullRun(benchmark::State& state) {
    const auto profiles = sample_population(PopulationConfig{});
    const auto policy = preset("s4_hybrid");
    const auto shocks = generate_shocks(policy.horizon_months, policy.shock_std_dev, policy.shock_seed);
    for (auto _ : state) benchmark::DoNotOptimize(run_simulation(profiles, policy, policy.horizon_months, shocks));
}
BENCHMARK(BM_FullRun)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
