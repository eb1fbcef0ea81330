#include "nnssim/dynamics.hpp"

#include <cmath>
#include <string>

#include "nnssim/errors.hpp"
#include "nnssim/random.hpp"
#include "nnssim/rewards.hpp"

namespace nnssim {

double ShockSeries::sentiment_at(int month) const {
    if (sentiment.empty()) return 0.0;
    if (month < 0 || static_cast<std::size_t>(month) >= sentiment.size()) {
        throw DomainError("month " + std::to_string(month) + " outside shock series of length " +
                          std::to_string(sentiment.size()));
    }
    return sentiment[static_cast<std::size_t>(month)];
}

ShockSeries generate_shocks(int horizon_months, double std_dev, std::uint64_t seed) {
    if (horizon_months < 1) throw DomainError("shock horizon must be at least one month");
    if (!(std_dev >= 0.0) || !std::isfinite(std_dev)) {
        throw DomainError("shock std_dev must be non-negative and finite");
    }
    ShockSeries shocks;
    shocks.std_dev = std_dev;
    shocks.seed = seed;
    shocks.sentiment.reserve(static_cast<std::size_t>(horizon_months));
    Xoshiro256StarStar rng(seed);
    for (int t = 0; t < horizon_months; ++t) shocks.sentiment.push_back(rng.normal(0.0, std_dev));
    return shocks;
}

double adjusted_threshold(const AgentProfile& profile, int month, const ShockSeries& shocks) {
    return profile.staking_threshold + shocks.threshold_shock_at(month);
}

double WorldState::total_holdings() const noexcept {
    double total = 0.0;
    for (const auto& n : neurons) total += n.holdings();
    return total;
}

WorldState genesis(std::span<const AgentProfile> profiles, const PolicyConfig& policy) {
    policy.validate();
    WorldState world;
    world.month = 0;
    world.current_supply = policy.initial_supply;
    world.schedule = build_supply_schedule(policy.initial_supply, policy.horizon_months, policy.inflation);
    world.policy = policy;
    world.neurons.reserve(profiles.size());
    for (std::size_t i = 0; i < profiles.size(); ++i) {
        if (profiles[i].agent_id != i) {
            throw DomainError("agent ids must be dense and ordered; profile " + std::to_string(i) +
                              " has id " + std::to_string(profiles[i].agent_id));
        }
        NeuronState n;
        n.agent_id = i;
        n.liquid_balance = profiles[i].endowment;
        world.neurons.push_back(n);
    }
    return world;
}

namespace {

Decision decide(const NeuronState& n, const AgentProfile& profile, double threshold,
                double realized_ratio, double aggregate, double pool, const MultiplierPolicy& policy) {
    switch (n.status) {
        case NeuronStatus::Liquid: {
            if (!(n.liquid_balance > 0.0)) return Decision::Hold;
            const double estimate =
                estimated_annualized_ratio(profile.liquidity_preference, aggregate, pool, policy);
            return estimate > threshold ? Decision::Stake : Decision::Hold;
        }
        case NeuronStatus::Staking: {
            if (realized_ratio < threshold) return Decision::Unstake;
            if (n.liquid_balance > 0.0 &&
                estimated_annualized_ratio(n.dissolve_delay, aggregate, pool, policy) > threshold) {
                return Decision::TopUp;
            }
            return Decision::Hold;
        }
        case NeuronStatus::Dissolving:
            return Decision::Hold;
    }
    return Decision::Hold;
}

void apply(NeuronState& n, Decision decision, const AgentProfile& profile) {
    switch (decision) {
        case Decision::Hold:
            break;
        case Decision::Stake:
            n.status = NeuronStatus::Staking;
            n.stake += n.liquid_balance;
            n.liquid_balance = 0.0;
            n.dissolve_delay = profile.liquidity_preference;
            n.age = 0;
            break;
        case Decision::TopUp:
            n.stake += n.liquid_balance;
            n.liquid_balance = 0.0;
            break;
        case Decision::Unstake:
            n.status = NeuronStatus::Dissolving;
            n.age = 0;
            break;
    }
}

void advance_clock(NeuronState& n) {
    switch (n.status) {
        case NeuronStatus::Staking:
            ++n.age;
            break;
        case NeuronStatus::Dissolving:
            --n.dissolve_delay;
            if (n.dissolve_delay <= 0) {
                n.status = NeuronStatus::Liquid;
                n.liquid_balance += n.stake;
                n.stake = 0.0;
                n.dissolve_delay = 0;
                n.age = 0;
            }
            break;
        case NeuronStatus::Liquid:
            break;
    }
}

}  // namespace

StepOutcome step_month(WorldState world, std::span<const AgentProfile> profiles,
                       const ShockSeries& shocks) {
    const int t = world.month;
    if (t < 0 || t >= world.schedule.horizon_months) {
        throw DomainError("month " + std::to_string(t) + " is past the simulation horizon of " +
                          std::to_string(world.schedule.horizon_months) + " months");
    }
    if (profiles.size() != world.neurons.size()) {
        throw DomainError("profile count does not match neuron count");
    }
    const MultiplierPolicy& multipliers = world.policy.multipliers;
    const std::size_t n_agents = world.neurons.size();

    StepLog log;
    log.pool = world.schedule.monthly_reward(t);

    // 1. snapshot
    const auto governors = select_governors(world.neurons, multipliers);
    log.governors_at_entry = governors.size();
    log.aggregate_at_entry = governor_aggregate(governors);

    // 2. rewards
    std::vector<double> realized(n_agents, 0.0);
    log.rewards.assign(n_agents, 0.0);
    double mean_realized = 0.0;
    if (!governors.empty()) {
        const auto outcomes = distribute_rewards(governors, log.pool);
        for (const auto& o : outcomes) {
            world.neurons[o.agent_id].liquid_balance += o.reward;
            log.rewards[o.agent_id] = o.reward;
            realized[o.agent_id] = o.annualized_ratio;
            mean_realized += o.annualized_ratio;
        }
        mean_realized /= static_cast<double>(outcomes.size());
        log.minted = log.pool;
    }

    // 3. decisions, all against the snapshot
    log.decisions.resize(n_agents, Decision::Hold);
    for (std::size_t i = 0; i < n_agents; ++i) {
        const double threshold = adjusted_threshold(profiles[i], t, shocks);
        log.decisions[i] = decide(world.neurons[i], profiles[i], threshold, realized[i],
                                  log.aggregate_at_entry, log.pool, multipliers);
    }

    // 4. apply, 5. clocks
    for (std::size_t i = 0; i < n_agents; ++i) {
        apply(world.neurons[i], log.decisions[i], profiles[i]);
        advance_clock(world.neurons[i]);
    }

    // 6. supply
    world.current_supply += log.minted;
    world.month = t + 1;

    MetricsFrame frame = aggregate(world.neurons, SupplyContext{
                                                      .month = t,
                                                      .total_supply = world.current_supply,
                                                      .minted_this_month = log.minted,
                                                      .mean_realized_annualized_ratio = mean_realized,
                                                  });
    return StepOutcome{std::move(world), frame, std::move(log)};
}

std::vector<MetricsFrame> run_simulation(std::span<const AgentProfile> profiles,
                                         const PolicyConfig& policy, int horizon_months,
                                         const ShockSeries& shocks, const StepObserver& observer) {
    if (horizon_months < 1) throw DomainError("horizon must be at least one month");
    PolicyConfig run_policy = policy;
    run_policy.horizon_months = horizon_months;
    WorldState world = genesis(profiles, run_policy);

    std::vector<MetricsFrame> frames;
    frames.reserve(static_cast<std::size_t>(horizon_months));
    for (int t = 0; t < horizon_months; ++t) {
        if (observer) {
            WorldState before = world;
            auto outcome = step_month(std::move(world), profiles, shocks);
            observer(before, outcome);
            frames.push_back(outcome.frame);
            world = std::move(outcome.world);
        } else {
            auto outcome = step_month(std::move(world), profiles, shocks);
            frames.push_back(outcome.frame);
            world = std::move(outcome.world);
        }
    }
    return frames;
}

}  // namespace nnssim
