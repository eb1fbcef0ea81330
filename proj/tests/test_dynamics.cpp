#include <doctest.h>

#include <cmath>
#include <set>
#include <utility>

#include "nnssim/dynamics.hpp"
#include "nnssim/errors.hpp"
#include "nnssim/rewards.hpp"
#include "nnssim/scenarios.hpp"

using namespace nnssim;

namespace {

// A world with a flat pool of `pool` tokens every month.
WorldState flat_world(std::vector<NeuronState> neurons, double pool, int horizon,
                      MultiplierPolicy multipliers = {}) {
    WorldState w;
    w.policy.multipliers = multipliers;
    w.policy.horizon_months = horizon;
    w.schedule.initial_supply = 1e6;
    w.schedule.horizon_months = horizon;
    w.schedule.monthly_rewards.assign(static_cast<std::size_t>(horizon), pool);
    w.schedule.yearly_rates.assign(static_cast<std::size_t>((horizon + 11) / 12), 0.05);
    w.schedule.yearly_rewards.assign(w.schedule.yearly_rates.size(), pool * 12);
    w.schedule.yearly_supplies.assign(w.schedule.yearly_rates.size() + 1, 1e6);
    w.current_supply = 1e6;
    w.neurons = std::move(neurons);
    return w;
}

NeuronState staking(std::size_t id, double stake, int delay, int age = 0) {
    return NeuronState{id, NeuronStatus::Staking, stake, 0.0, delay, age};
}

std::vector<AgentProfile> profiles_with_threshold(std::size_t n, double threshold, int preference = 96) {
    std::vector<AgentProfile> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(AgentProfile{i, 1000.0, threshold, preference});
    return out;
}

bool legal_transition(NeuronStatus from, NeuronStatus to) {
    using enum NeuronStatus;
    static const std::set<std::pair<NeuronStatus, NeuronStatus>> allowed = {
        {Liquid, Liquid},         {Liquid, Staking},       {Staking, Staking},
        {Staking, Dissolving},    {Dissolving, Dissolving}, {Dissolving, Liquid},
    };
    return allowed.contains({from, to});
}

}  // namespace

TEST_SUITE("dynamics") {

TEST_CASE("adjusted threshold follows the negated sentiment shock") {
    const AgentProfile p{0, 1.0, 0.08, 12};
    ShockSeries up;
    up.sentiment = {0.01};
    CHECK(adjusted_threshold(p, 0, up) == doctest::Approx(0.07).epsilon(1e-14));
    ShockSeries none;
    CHECK(adjusted_threshold(p, 0, none) == 0.08);
    ShockSeries big;
    big.sentiment = {0.02};
    const AgentProfile low{0, 1.0, 0.005, 12};
    CHECK(adjusted_threshold(low, 0, big) == doctest::Approx(-0.015).epsilon(1e-12));
    CHECK_THROWS_AS(adjusted_threshold(p, 1, up), DomainError);
}

TEST_CASE("generated shocks are seeded and zero when std_dev is zero") {
    const auto a = generate_shocks(24, 0.01, 5);
    const auto b = generate_shocks(24, 0.01, 5);
    CHECK(a.sentiment == b.sentiment);
    CHECK(a.sentiment.size() == 24);
    for (int t = 0; t < 24; ++t) CHECK(a.threshold_shock_at(t) == -a.sentiment_at(t));
    for (double s : generate_shocks(12, 0.0, 5).sentiment) CHECK(s == 0.0);
    CHECK_THROWS_AS(generate_shocks(12, -1.0, 5), DomainError);
}

TEST_CASE("genesis is all liquid") {
    const auto profiles = profiles_with_threshold(5, 0.1);
    const auto w = genesis(profiles, preset("benchmark"));
    REQUIRE(w.neurons.size() == 5);
    for (const auto& n : w.neurons) {
        CHECK(n.status == NeuronStatus::Liquid);
        CHECK(n.liquid_balance == 1000.0);
        CHECK(n.stake == 0.0);
    }
    CHECK(w.current_supply == 469e6);
}

TEST_CASE("first step: everyone stakes against an empty governor set") {
    const auto profiles = profiles_with_threshold(20, 0.3);
    auto out = step_month(genesis(profiles, preset("s4_hybrid")), profiles, ShockSeries{});
    CHECK(out.log.governors_at_entry == 0);
    CHECK(out.log.minted == 0.0);
    CHECK(out.frame.governor_count == 20);
    for (const auto& n : out.world.neurons) {
        CHECK(n.status == NeuronStatus::Staking);
        CHECK(n.dissolve_delay == 96);
        CHECK(n.age == 1);
        CHECK(n.stake == 1000.0);
    }
    CHECK(out.world.month == 1);
}

TEST_CASE("single staker keeps staking at a 120% yield") {
    // s = 1200, delay 96 -> d = 2, age 0 -> a = 1, pool 120: 12 * 120 / 1200 = 1.2.
    const auto profiles = profiles_with_threshold(1, 0.10);
    auto out = step_month(flat_world({staking(0, 1200, 96)}, 120, 12), profiles, ShockSeries{});
    CHECK(out.log.rewards[0] == 120.0);
    CHECK(out.frame.mean_realized_annualized_ratio == doctest::Approx(1.2).epsilon(1e-15));
    CHECK(out.log.decisions[0] == Decision::TopUp);
    CHECK(out.world.neurons[0].status == NeuronStatus::Staking);
    CHECK(out.world.neurons[0].stake == 1320.0);
    CHECK(out.world.neurons[0].dissolve_delay == 96);
}

TEST_CASE("a staker whose yield falls under its threshold starts dissolving") {
    const auto profiles = profiles_with_threshold(1, 2.0);
    auto out = step_month(flat_world({staking(0, 1200, 24, 10)}, 120, 12), profiles, ShockSeries{});
    CHECK(out.log.decisions[0] == Decision::Unstake);
    const auto& n = out.world.neurons[0];
    CHECK(n.status == NeuronStatus::Dissolving);
    CHECK(n.age == 0);
    CHECK(n.dissolve_delay == 23);
    CHECK(n.liquid_balance == 120.0);
}

TEST_CASE("dissolving neuron at six months earns once more, then drops out") {
    const auto profiles = profiles_with_threshold(2, 0.0);
    NeuronState dissolving{1, NeuronStatus::Dissolving, 100.0, 0.0, 6, 0};
    auto first = step_month(flat_world({staking(0, 100, 96), dissolving}, 10, 12), profiles, ShockSeries{});
    CHECK(first.log.rewards[1] > 0.0);
    CHECK(first.world.neurons[1].dissolve_delay == 5);
    auto second = step_month(std::move(first.world), profiles, ShockSeries{});
    CHECK(second.log.rewards[1] == 0.0);
    CHECK(second.log.rewards[0] == 10.0);
}

TEST_CASE("dissolving neuron turns liquid when the delay runs out") {
    const auto profiles = profiles_with_threshold(2, 5.0);
    NeuronState dissolving{1, NeuronStatus::Dissolving, 100.0, 3.0, 1, 0};
    auto out = step_month(flat_world({staking(0, 100, 96), dissolving}, 10, 12), profiles, ShockSeries{});
    const auto& n = out.world.neurons[1];
    CHECK(n.status == NeuronStatus::Liquid);
    CHECK(n.stake == 0.0);
    CHECK(n.liquid_balance == 103.0);
    CHECK(n.dissolve_delay == 0);
}

TEST_CASE("stepping past the horizon is an error") {
    const auto profiles = profiles_with_threshold(1, 0.1);
    auto w = flat_world({staking(0, 10, 12)}, 1, 1);
    auto out = step_month(std::move(w), profiles, ShockSeries{});
    CHECK_THROWS_AS(step_month(std::move(out.world), profiles, ShockSeries{}), DomainError);
}

TEST_CASE("zero-shock single agent: realized ratio is 12 R / s and it never unstakes") {
    const std::vector<AgentProfile> profiles = {{0, 5000.0, 0.05, 30}};
    auto policy = preset("s4_hybrid");
    policy.horizon_months = 60;
    WorldState w = genesis(profiles, policy);
    for (int t = 0; t < 60; ++t) {
        const double stake_before = w.neurons[0].stake;
        auto out = step_month(std::move(w), profiles, ShockSeries{});
        if (t > 0) {
            const double expected = 12.0 * out.log.pool / stake_before;
            CHECK(out.frame.mean_realized_annualized_ratio == doctest::Approx(expected).epsilon(1e-15));
            CHECK(expected > 0.05);
        }
        CHECK(out.world.neurons[0].status == NeuronStatus::Staking);
        w = std::move(out.world);
    }
}

TEST_CASE("run invariants over every preset") {
    PopulationConfig pop;
    pop.n_agents = 1500;
    pop.seed = 4242;
    const auto profiles = sample_population(pop);
    for (auto name : preset_names()) {
        CAPTURE(name);
        auto policy = preset(name);
        const auto shocks = generate_shocks(96, 0.01, 9);
        std::size_t illegal = 0;
        double worst_conservation = 0.0;
        run_simulation(profiles, policy, 96, shocks, [&](const WorldState& before, const StepOutcome& after) {
            const double held_before = before.total_holdings();
            const double held_after = after.world.total_holdings();
            worst_conservation = std::max(
                worst_conservation, std::fabs(held_after - (held_before + after.log.minted)) / held_after);
            CHECK(after.world.current_supply == before.current_supply + after.log.minted);
            for (std::size_t i = 0; i < before.neurons.size(); ++i) {
                const auto& a = before.neurons[i];
                const auto& b = after.world.neurons[i];
                if (!legal_transition(a.status, b.status)) ++illegal;
                if (after.log.rewards[i] > 0.0) {
                    CHECK(is_governor(a));
                    CHECK(a.dissolve_delay >= 6);
                }
                if (a.status == NeuronStatus::Staking && b.status == NeuronStatus::Staking) {
                    CHECK(a.dissolve_delay == b.dissolve_delay);
                }
                if (b.status != NeuronStatus::Staking) CHECK(b.age == 0);
                if (b.status == NeuronStatus::Liquid) {
                    CHECK(b.stake == 0.0);
                    CHECK(b.dissolve_delay == 0);
                }
                if (b.status == NeuronStatus::Staking) {
                    CHECK(b.stake > 0.0);
                    CHECK(b.dissolve_delay >= 6);
                }
                if (b.status == NeuronStatus::Dissolving) CHECK(b.stake > 0.0);
                CHECK(b.stake >= 0.0);
                CHECK(b.liquid_balance >= 0.0);
            }
        });
        CHECK(illegal == 0);
        CHECK(worst_conservation <= 1e-9);
    }
}

TEST_CASE("runs are deterministic and the benchmark staking ratio moves") {
    PopulationConfig pop;
    pop.n_agents = 3000;
    const auto profiles = sample_population(pop);
    const auto shocks = generate_shocks(96, 0.01, 1);
    const auto policy = preset("benchmark");
    const auto a = run_simulation(profiles, policy, 96, shocks);
    const auto b = run_simulation(profiles, policy, 96, shocks);
    CHECK(a == b);
    REQUIRE(a.size() == 96);
    std::set<double> distinct;
    for (const auto& f : a) distinct.insert(f.staking_ratio());
    CHECK(distinct.size() > 10);
}

TEST_CASE("horizon one from genesis") {
    const auto profiles = sample_population(PopulationConfig{});
    const auto frames = run_simulation(profiles, preset("s4_hybrid"), 1, ShockSeries{});
    REQUIRE(frames.size() == 1);
    CHECK(frames[0].governor_count == 10'000);
    CHECK(frames[0].minted_this_month == 0.0);
    CHECK_THROWS_AS(run_simulation(profiles, preset("s4_hybrid"), 0, ShockSeries{}), DomainError);
}

}
