#include "nnssim/rewards.hpp"

#include <string>

#include "nnssim/errors.hpp"

namespace nnssim {

bool is_governor(const NeuronState& neuron) noexcept {
    if (!(neuron.stake > 0.0)) return false;
    switch (neuron.status) {
        case NeuronStatus::Staking:
            return true;
        case NeuronStatus::Dissolving:
            return neuron.dissolve_delay >= kMinGovernorDelayMonths;
        case NeuronStatus::Liquid:
            return false;
    }
    return false;
}

std::vector<GovernorView> select_governors(std::span<const NeuronState> neurons,
                                           const MultiplierPolicy& policy) {
    std::vector<GovernorView> governors;
    for (const auto& n : neurons) {
        if (!is_governor(n)) continue;
        governors.push_back(GovernorView{
            .agent_id = n.agent_id,
            .stake = n.stake,
            .age_mult = age_multiplier(n.age, policy.age),
            .delay_mult = dissolve_delay_multiplier(n.dissolve_delay, policy.dissolve),
        });
    }
    return governors;
}

double governor_aggregate(std::span<const GovernorView> governors) noexcept {
    double total = 0.0;
    for (const auto& g : governors) total += g.weight();
    return total;
}

std::vector<double> reward_proportions(std::span<const GovernorView> governors) {
    if (governors.empty()) throw NoGovernors();
    const double aggregate = governor_aggregate(governors);
    std::vector<double> proportions;
    proportions.reserve(governors.size());
    for (const auto& g : governors) proportions.push_back(g.weight() / aggregate);
    return proportions;
}

std::vector<RewardOutcome> distribute_rewards(std::span<const GovernorView> governors, double pool) {
    if (!(pool >= 0.0)) throw DomainError("reward pool must be non-negative");
    const auto proportions = reward_proportions(governors);
    std::vector<RewardOutcome> outcomes;
    outcomes.reserve(governors.size());
    for (std::size_t i = 0; i < governors.size(); ++i) {
        const double reward = pool * proportions[i];
        const double monthly = reward / governors[i].stake;
        outcomes.push_back(RewardOutcome{
            .agent_id = governors[i].agent_id,
            .proportion = proportions[i],
            .reward = reward,
            .monthly_ratio = monthly,
            .annualized_ratio = kMonthsPerYear * monthly,
        });
    }
    return outcomes;
}

double estimated_annualized_ratio(double candidate_delay, double aggregate, double pool,
                                  const MultiplierPolicy& policy) {
    const double d = dissolve_delay_multiplier(candidate_delay, policy.dissolve);
    if (d == 0.0) return 0.0;
    if (!(aggregate > 0.0)) return kUnboundedRatio;
    return kMonthsPerYear * pool * d / aggregate;
}

double estimated_annualized_ratio(double candidate_delay, std::span<const GovernorView> governors,
                                  double pool, const MultiplierPolicy& policy) {
    return estimated_annualized_ratio(candidate_delay, governor_aggregate(governors), pool, policy);
}

}  // namespace nnssim
