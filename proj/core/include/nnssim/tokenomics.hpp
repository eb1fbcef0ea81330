#pragma once

// Multiplier curves, the yearly inflation schedule and supply compounding.
//
// Time is measured in whole months, 0-indexed. Month t belongs to year
// floor(t / 12). All functions here are pure.

#include <cstddef>
#include <vector>

namespace nnssim {

enum class InflationPolicy {
    ConstantFivePercent,
    DynamicQuadratic,
};

enum class DissolveCurve {
    FixedAtSixMonthValue,  // 1.0625 for every eligible neuron
    FullLinearCurve,
};

enum class AgeCurve {
    Disabled,  // always 1.0
    FullLinearCurve,
};

struct MultiplierPolicy {
    DissolveCurve dissolve = DissolveCurve::FullLinearCurve;
    AgeCurve age = AgeCurve::FullLinearCurve;

    friend bool operator==(const MultiplierPolicy&, const MultiplierPolicy&) = default;
};

inline constexpr int kMonthsPerYear = 12;
inline constexpr double kMinGovernorDelayMonths = 6.0;
inline constexpr double kMaxDissolveDelayMonths = 96.0;
inline constexpr double kMaxAgeMonths = 48.0;
inline constexpr double kMaxAgeBonus = 0.25;
inline constexpr double kFloorInflationRate = 0.05;
inline constexpr int kInflationDecayYears = 8;

/// Dissolve-delay multiplier. Zero below six months, then 1 + min(delay, 96) / 96.
double dissolve_delay_multiplier(double delay_months, DissolveCurve curve);

/// Age multiplier, 1 + 0.25 * min(age, 48) / 48.
double age_multiplier(double age_months, AgeCurve curve);

double voting_power(double stake, double delay_months, double age_months,
                    const MultiplierPolicy& policy);

/// 0.05 + 0.05 * ((8 - y) / 8)^2 for y <= 8 and 0.05 afterwards under the
/// dynamic policy; a flat 0.05 under the constant one.
double yearly_inflation_rate(int year, InflationPolicy policy);

constexpr int year_of_month(int month) noexcept { return month / kMonthsPerYear; }

/// Year-by-year issuance plan. `yearly_supplies` has one more entry than the
/// other yearly vectors: it ends with the supply after the last scheduled year.
struct SupplySchedule {
    double initial_supply = 0.0;
    int horizon_months = 0;
    std::vector<double> yearly_rates;
    std::vector<double> yearly_supplies;
    std::vector<double> yearly_rewards;
    std::vector<double> monthly_rewards;  // one entry per month of the horizon

    std::size_t years() const noexcept { return yearly_rates.size(); }

    /// Base reward pool R_t for a month inside the horizon.
    double monthly_reward(int month) const;
    /// Scheduled supply I_y in force during `month`.
    double supply_for_month(int month) const;
};

/// Covers ceil(horizon / 12) years; every month of year y carries R_y / 12.
SupplySchedule build_supply_schedule(double initial_supply, int horizon_months,
                                     InflationPolicy policy);

}  // namespace nnssim
