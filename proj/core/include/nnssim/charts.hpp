#pragma once

// The figure types produced by the tool, built on top of nnssim::svg.

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "nnssim/metrics.hpp"
#include "nnssim/population.hpp"
#include "nnssim/svg.hpp"
#include "nnssim/tokenomics.hpp"

namespace nnssim {

enum class ChartKind {
    MultiplierCurve,
    InflationSupply,
    RewardSchedule,
    GovernorCounts,
    TokenPercentages,
    PopulationHistograms,
};

/// Throws ConfigError for an unknown kind name.
ChartKind parse_chart_kind(std::string_view name);
std::string_view to_string(ChartKind kind) noexcept;

/// Whichever inputs the chosen kind needs. Metrics-based charts read
/// `frames`, schedule charts read `schedule`, histograms read `population`.
struct ChartInput {
    std::span<const MetricsFrame> frames{};
    const SupplySchedule* schedule = nullptr;
    const PopulationSummary* population = nullptr;
    std::string subtitle{};
};

/// Full dissolve and age curves over 0..96 months. The dissolve series has a
/// gap between 5 and 6 months where it jumps from 0 to 1.0625.
svg::LineChart multiplier_curve_chart();
svg::LineChart inflation_supply_chart(const SupplySchedule& schedule);
svg::LineChart reward_schedule_chart(const SupplySchedule& schedule);
svg::LineChart governor_counts_chart(std::span<const MetricsFrame> frames);
/// Liquid, staking and dissolving shares in percent, stacked to 100.
svg::LineChart token_percentages_chart(std::span<const MetricsFrame> frames);

/// Throws DomainError when the input the kind needs is missing.
std::string render_chart(ChartKind kind, const ChartInput& input);
void emit_chart(ChartKind kind, const ChartInput& input, const std::filesystem::path& destination);

}  // namespace nnssim
