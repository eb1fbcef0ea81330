#pragma once

// Governor selection and the monthly reward split.
//
// A governor is a neuron that is Staking, or Dissolving with at least six
// months of delay left. Each governor's weight is stake * age multiplier *
// dissolve multiplier; the month's pool is split in proportion to weight.

#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "nnssim/neuron.hpp"
#include "nnssim/tokenomics.hpp"

namespace nnssim {

/// Raised when a reward split is requested for a month without governors.
/// That month's pool is withheld (not minted).
class NoGovernors : public std::domain_error {
public:
    NoGovernors() : std::domain_error("no governors: reward pool cannot be distributed") {}
};

struct GovernorView {
    std::size_t agent_id = 0;
    double stake = 0.0;
    double age_mult = 1.0;
    double delay_mult = 0.0;

    double weight() const noexcept { return stake * age_mult * delay_mult; }
};

struct RewardOutcome {
    std::size_t agent_id = 0;
    double proportion = 0.0;
    double reward = 0.0;
    double monthly_ratio = 0.0;
    double annualized_ratio = 0.0;
};

/// Returned by estimated_annualized_ratio when nobody governs yet: the first
/// staker would collect the whole pool.
inline constexpr double kUnboundedRatio = std::numeric_limits<double>::infinity();

bool is_governor(const NeuronState& neuron) noexcept;

/// Views are returned in the order of `neurons`.
std::vector<GovernorView> select_governors(std::span<const NeuronState> neurons,
                                           const MultiplierPolicy& policy);

/// Sum of governor weights (the denominator of every proportion).
double governor_aggregate(std::span<const GovernorView> governors) noexcept;

std::vector<double> reward_proportions(std::span<const GovernorView> governors);

std::vector<RewardOutcome> distribute_rewards(std::span<const GovernorView> governors, double pool);

/// Prospective age-zero yield of staking with `candidate_delay` against an
/// existing weight aggregate: 12 * pool * d(delay) / aggregate. The candidate's
/// own stake is not added to the aggregate. Zero below six months.
double estimated_annualized_ratio(double candidate_delay, double aggregate, double pool,
                                  const MultiplierPolicy& policy);

double estimated_annualized_ratio(double candidate_delay, std::span<const GovernorView> governors,
                                  double pool, const MultiplierPolicy& policy);

}  // namespace nnssim
