#pragma once

// Monthly simulation engine.
//
// Each step runs in a fixed order against a start-of-month snapshot:
//   1. snapshot the governor set and its weight aggregate,
//   2. split the month's pool over the snapshot governors, crediting liquid balances,
//   3. decide for every agent simultaneously (stake / top up / unstake),
//   4. apply the decisions,
//   5. advance clocks: staking neurons age, dissolving neurons count down and
//      turn liquid at zero delay,
//   6. mint the distributed pool into supply and advance the month.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "nnssim/metrics.hpp"
#include "nnssim/neuron.hpp"
#include "nnssim/policy.hpp"
#include "nnssim/population.hpp"
#include "nnssim/tokenomics.hpp"

namespace nnssim {

/// Macro sentiment shocks, one per month, shared by every agent. A positive
/// sentiment shock lowers every staking threshold by the same amount.
struct ShockSeries {
    std::vector<double> sentiment;
    double std_dev = 0.0;
    std::uint64_t seed = 0;

    /// Sentiment shock for `month`; an empty series means no shocks at all.
    double sentiment_at(int month) const;
    double threshold_shock_at(int month) const { return -sentiment_at(month); }
};

/// i.i.d. Normal(0, std_dev) draws from their own stream. std_dev = 0 gives all zeros.
ShockSeries generate_shocks(int horizon_months, double std_dev, std::uint64_t seed);

/// Staking threshold plus this month's threshold shock. May be negative.
double adjusted_threshold(const AgentProfile& profile, int month, const ShockSeries& shocks);

struct WorldState {
    int month = 0;
    double current_supply = 0.0;
    std::vector<NeuronState> neurons;  // indexed by agent id
    SupplySchedule schedule;
    PolicyConfig policy;

    int year() const noexcept { return year_of_month(month); }
    double total_holdings() const noexcept;
};

/// All agents liquid, each holding its endowment.
WorldState genesis(std::span<const AgentProfile> profiles, const PolicyConfig& policy);

enum class Decision : std::uint8_t { Hold, Stake, TopUp, Unstake };

struct StepLog {
    std::size_t governors_at_entry = 0;
    double aggregate_at_entry = 0.0;
    double pool = 0.0;
    double minted = 0.0;
    std::vector<double> rewards;      // indexed by agent id
    std::vector<Decision> decisions;  // indexed by agent id
};

struct StepOutcome {
    WorldState world;
    MetricsFrame frame;
    StepLog log;
};

/// Advances one month. Throws DomainError once the horizon is exhausted.
StepOutcome step_month(WorldState world, std::span<const AgentProfile> profiles,
                       const ShockSeries& shocks);

/// Called after every step with the state the step started from.
using StepObserver = std::function<void(const WorldState& before, const StepOutcome& after)>;

/// Runs `horizon_months` steps from genesis and returns one frame per month.
/// `policy.horizon_months` is ignored in favour of the explicit horizon.
std::vector<MetricsFrame> run_simulation(std::span<const AgentProfile> profiles,
                                         const PolicyConfig& policy, int horizon_months,
                                         const ShockSeries& shocks,
                                         const StepObserver& observer = {});

}  // namespace nnssim
