#include "nnssim/charts.hpp"

#include <array>
#include <limits>

#include "nnssim/errors.hpp"

namespace nnssim {

namespace {

constexpr std::array<std::string_view, 6> kKindNames = {
    "multiplier_curve", "inflation_supply", "reward_schedule",
    "governor_counts",  "token_percentages", "population_histograms",
};

std::string with_subtitle(std::string title, const std::string& subtitle) {
    if (!subtitle.empty()) title += " (" + subtitle + ")";
    return title;
}

void require_frames(std::span<const MetricsFrame> frames) {
    if (frames.empty()) throw DomainError("chart needs at least one metrics frame");
}

}  // namespace

ChartKind parse_chart_kind(std::string_view name) {
    for (std::size_t i = 0; i < kKindNames.size(); ++i) {
        if (kKindNames[i] == name) return static_cast<ChartKind>(i);
    }
    throw ConfigError("chart kind: unknown '" + std::string(name) + "'");
}

std::string_view to_string(ChartKind kind) noexcept {
    return kKindNames[static_cast<std::size_t>(kind)];
}

svg::LineChart multiplier_curve_chart() {
    svg::LineChart chart;
    chart.title = "Voting power multipliers";
    chart.x_label = "months (dissolve delay or age)";
    chart.y_label = "multiplier";
    svg::Series dissolve{.name = "dissolve delay multiplier"};
    svg::Series age{.name = "age multiplier"};
    for (int m = 0; m <= static_cast<int>(kMaxDissolveDelayMonths); ++m) {
        if (m == static_cast<int>(kMinGovernorDelayMonths)) {
            dissolve.x.push_back(m - 0.5);
            dissolve.y.push_back(std::numeric_limits<double>::quiet_NaN());
        }
        dissolve.x.push_back(m);
        dissolve.y.push_back(dissolve_delay_multiplier(m, DissolveCurve::FullLinearCurve));
        age.x.push_back(m);
        age.y.push_back(age_multiplier(m, AgeCurve::FullLinearCurve));
    }
    chart.series = {std::move(dissolve), std::move(age)};
    return chart;
}

svg::LineChart inflation_supply_chart(const SupplySchedule& schedule) {
    svg::LineChart chart;
    chart.title = "Yearly inflation rate and total supply";
    chart.x_label = "year";
    chart.y_label = "inflation rate (%)";
    chart.y2_label = "total supply (tokens)";
    svg::Series rate{.name = "inflation rate"};
    svg::Series supply{.name = "total supply", .right_axis = true};
    for (std::size_t y = 0; y < schedule.years(); ++y) {
        rate.x.push_back(static_cast<double>(y));
        rate.y.push_back(100.0 * schedule.yearly_rates[y]);
    }
    for (std::size_t y = 0; y < schedule.yearly_supplies.size(); ++y) {
        supply.x.push_back(static_cast<double>(y));
        supply.y.push_back(schedule.yearly_supplies[y]);
    }
    chart.series = {std::move(rate), std::move(supply)};
    return chart;
}

svg::LineChart reward_schedule_chart(const SupplySchedule& schedule) {
    svg::LineChart chart;
    chart.title = "Monthly and yearly reward issuance";
    chart.x_label = "month";
    chart.y_label = "monthly reward (tokens)";
    chart.y2_label = "yearly reward (tokens)";
    svg::Series monthly{.name = "monthly reward"};
    svg::Series yearly{.name = "yearly reward", .right_axis = true};
    for (int t = 0; t < schedule.horizon_months; ++t) {
        monthly.x.push_back(t);
        monthly.y.push_back(schedule.monthly_rewards[static_cast<std::size_t>(t)]);
        yearly.x.push_back(t);
        yearly.y.push_back(schedule.yearly_rewards[static_cast<std::size_t>(year_of_month(t))]);
    }
    chart.series = {std::move(monthly), std::move(yearly)};
    return chart;
}

svg::LineChart governor_counts_chart(std::span<const MetricsFrame> frames) {
    require_frames(frames);
    svg::LineChart chart;
    chart.title = "Governors and governance tokens";
    chart.x_label = "month";
    chart.y_label = "governors";
    chart.y2_label = "staked tokens";
    svg::Series governors{.name = "governor count"};
    svg::Series staked{.name = "staked tokens", .right_axis = true};
    for (const auto& f : frames) {
        governors.x.push_back(f.month);
        governors.y.push_back(static_cast<double>(f.governor_count));
        staked.x.push_back(f.month);
        staked.y.push_back(f.tokens_staking);
    }
    chart.series = {std::move(governors), std::move(staked)};
    return chart;
}

svg::LineChart token_percentages_chart(std::span<const MetricsFrame> frames) {
    require_frames(frames);
    svg::LineChart chart;
    chart.title = "Token distribution by state";
    chart.x_label = "month";
    chart.y_label = "share of tokens (%)";
    chart.stacked = true;
    svg::Series staking{.name = "staking"};
    svg::Series dissolving{.name = "dissolving"};
    svg::Series liquid{.name = "liquid"};
    for (const auto& f : frames) {
        for (auto* s : {&staking, &dissolving, &liquid}) s->x.push_back(f.month);
        staking.y.push_back(100.0 * f.pct_staking);
        dissolving.y.push_back(100.0 * f.pct_dissolving);
        liquid.y.push_back(100.0 * f.pct_liquid);
    }
    chart.series = {std::move(staking), std::move(dissolving), std::move(liquid)};
    return chart;
}

std::string render_chart(ChartKind kind, const ChartInput& input) {
    auto finish = [&](svg::LineChart chart) {
        chart.title = with_subtitle(std::move(chart.title), input.subtitle);
        return svg::render(chart);
    };
    switch (kind) {
        case ChartKind::MultiplierCurve:
            return finish(multiplier_curve_chart());
        case ChartKind::InflationSupply:
            if (input.schedule == nullptr) throw DomainError("inflation_supply chart needs a schedule");
            return finish(inflation_supply_chart(*input.schedule));
        case ChartKind::RewardSchedule:
            if (input.schedule == nullptr) throw DomainError("reward_schedule chart needs a schedule");
            return finish(reward_schedule_chart(*input.schedule));
        case ChartKind::GovernorCounts:
            return finish(governor_counts_chart(input.frames));
        case ChartKind::TokenPercentages:
            return finish(token_percentages_chart(input.frames));
        case ChartKind::PopulationHistograms: {
            if (input.population == nullptr) {
                throw DomainError("population_histograms chart needs a population summary");
            }
            std::vector<svg::HistogramPanel> panels;
            const std::array<const char*, 3> units = {"tokens", "annualized ratio", "months"};
            const auto features = input.population->features();
            for (std::size_t i = 0; i < features.size(); ++i) {
                panels.push_back(svg::HistogramPanel{
                    .title = std::string(features[i]->feature),
                    .x_label = units[i],
                    .bins = {features[i]->histogram.begin(), features[i]->histogram.end()},
                });
            }
            return svg::render(with_subtitle("Agent feature distributions", input.subtitle), panels);
        }
    }
    throw DomainError("unknown chart kind");
}

void emit_chart(ChartKind kind, const ChartInput& input, const std::filesystem::path& destination) {
    write_text_file(destination, render_chart(kind, input));
}

}  // namespace nnssim
