#pragma once

// Agent population: endowment (log-normal), staking threshold (gamma) and
// liquidity preference (two-component normal mixture, clamped to [6, 96]
// months and rounded to whole months).

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace nnssim {

struct PopulationConfig {
    std::size_t n_agents = 10'000;
    double endowment_mean_log = 10.57;
    double endowment_sigma_log = 0.6;
    double threshold_k = 1.8;
    double threshold_theta = 0.055;
    double liq_mean1 = 18.0;
    double liq_mean2 = 96.0;
    double liq_std_dev = 5.0;
    double mixture_weight = 0.5;  // probability of the first (short-horizon) component
    std::uint64_t seed = 20210510;

    /// Throws ConfigError naming the first offending field.
    void validate() const;
};

struct AgentProfile {
    std::size_t agent_id = 0;
    double endowment = 0.0;
    double staking_threshold = 0.0;  // annualized reward ratio
    int liquidity_preference = 0;    // months; the dissolve delay chosen when staking
};

inline constexpr int kMinLiquidityPreference = 6;
inline constexpr int kMaxLiquidityPreference = 96;

/// Draws are made agent by agent in the order endowment, threshold, mixture
/// component, preference. Stream order is part of the reproducibility contract.
std::vector<AgentProfile> sample_population(const PopulationConfig& config);

inline constexpr std::size_t kHistogramBins = 50;

struct HistogramBin {
    double lo = 0.0;
    double hi = 0.0;
    std::size_t count = 0;
};

struct FeatureSummary {
    std::string_view feature;
    double total = 0.0;
    double mean = 0.0;
    double std_dev = 0.0;  // population standard deviation
    double min = 0.0;
    double max = 0.0;
    std::array<HistogramBin, kHistogramBins> histogram{};
};

struct PopulationSummary {
    std::size_t n_agents = 0;
    FeatureSummary endowment;
    FeatureSummary threshold;
    FeatureSummary liquidity_preference;

    std::array<const FeatureSummary*, 3> features() const {
        return {&endowment, &threshold, &liquidity_preference};
    }
};

/// Histograms span [min, max] of each feature in 50 equal bins; the top edge
/// is inclusive. Throws DomainError for an empty population.
PopulationSummary population_summary(std::span<const AgentProfile> profiles);

}  // namespace nnssim
