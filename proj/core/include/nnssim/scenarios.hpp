#pragma once

// Named policy presets and the paired-seed comparative runner.
//
//   benchmark    constant 5%, dissolve fixed at the six-month value, no age bonus
//   s1_inflation dynamic inflation only
//   s2_dissolve  full dissolve-delay curve only
//   s3_age       full age curve only
//   s4_hybrid    all three together

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nnssim/dynamics.hpp"
#include "nnssim/metrics.hpp"
#include "nnssim/policy.hpp"
#include "nnssim/population.hpp"

namespace nnssim {

std::span<const std::string_view> preset_names() noexcept;

/// Throws ConfigError listing the valid names when `name` is unknown.
PolicyConfig preset(std::string_view name);

/// Copies the policy flags of preset `name` onto `base`, keeping its supply,
/// horizon, shock and seed settings.
PolicyConfig apply_preset(std::string_view name, PolicyConfig base);

struct ScenarioSummary {
    double mean_staking_ratio = 0.0;
    /// Standard deviation of month-over-month changes in the staking ratio.
    double staking_ratio_volatility = 0.0;
    std::size_t final_governor_count = 0;
    double final_supply = 0.0;
};

ScenarioSummary summarize_frames(std::span<const MetricsFrame> frames);

struct ScenarioResult {
    std::string name;
    PolicyConfig policy;
    std::vector<MetricsFrame> frames;
    ScenarioSummary summary;
};

ScenarioResult run_scenario(std::string name, std::span<const AgentProfile> profiles,
                            const PolicyConfig& policy, const ShockSeries& shocks);

/// Runs every preset against one population sampled with
/// `base.population_seed` and one shock series drawn with `base.shock_seed`.
/// Scenarios run concurrently; results keep input order. A failing scenario
/// is rethrown with its name prefixed.
std::vector<ScenarioResult> run_comparative(std::span<const std::string> presets,
                                            PopulationConfig population, const PolicyConfig& base);

/// Same as above on an already sampled population and shock series.
std::vector<ScenarioResult> run_comparative(std::span<const std::string> presets,
                                            std::span<const AgentProfile> profiles,
                                            const PolicyConfig& base, const ShockSeries& shocks);

/// Summary table: scenario, mean staking ratio, volatility, final supply, final governor count.
std::string comparison_summary_csv(std::span<const ScenarioResult> results);

}  // namespace nnssim
