#include "nnssim/tokenomics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "nnssim/errors.hpp"

namespace nnssim {

namespace {

constexpr double kSixMonthMultiplier = 1.0 + kMinGovernorDelayMonths / kMaxDissolveDelayMonths;

void require_non_negative(double value, const char* what) {
    if (!(value >= 0.0)) {
        throw DomainError(std::string(what) + " must be non-negative, got " + std::to_string(value));
    }
}

}  // namespace

double dissolve_delay_multiplier(double delay_months, DissolveCurve curve) {
    require_non_negative(delay_months, "dissolve delay");
    if (delay_months < kMinGovernorDelayMonths) return 0.0;
    switch (curve) {
        case DissolveCurve::FixedAtSixMonthValue:
            return kSixMonthMultiplier;
        case DissolveCurve::FullLinearCurve:
            return 1.0 + std::min(delay_months, kMaxDissolveDelayMonths) / kMaxDissolveDelayMonths;
    }
    return 0.0;
}

double age_multiplier(double age_months, AgeCurve curve) {
    require_non_negative(age_months, "age");
    if (curve == AgeCurve::Disabled) return 1.0;
    return 1.0 + kMaxAgeBonus * std::min(age_months, kMaxAgeMonths) / kMaxAgeMonths;
}

double voting_power(double stake, double delay_months, double age_months,
                    const MultiplierPolicy& policy) {
    require_non_negative(stake, "stake");
    return stake * dissolve_delay_multiplier(delay_months, policy.dissolve) *
           age_multiplier(age_months, policy.age);
}

double yearly_inflation_rate(int year, InflationPolicy policy) {
    if (year < 0) throw DomainError("year must be non-negative, got " + std::to_string(year));
    if (policy == InflationPolicy::ConstantFivePercent || year > kInflationDecayYears) {
        return kFloorInflationRate;
    }
    const double remaining = static_cast<double>(kInflationDecayYears - year) / kInflationDecayYears;
    return kFloorInflationRate + kFloorInflationRate * remaining * remaining;
}

double SupplySchedule::monthly_reward(int month) const {
    if (month < 0 || month >= horizon_months) {
        throw DomainError("month " + std::to_string(month) + " outside schedule horizon " +
                          std::to_string(horizon_months));
    }
    return monthly_rewards[static_cast<std::size_t>(month)];
}

double SupplySchedule::supply_for_month(int month) const {
    if (month < 0 || month >= horizon_months) {
        throw DomainError("month " + std::to_string(month) + " outside schedule horizon " +
                          std::to_string(horizon_months));
    }
    return yearly_supplies[static_cast<std::size_t>(year_of_month(month))];
}

SupplySchedule build_supply_schedule(double initial_supply, int horizon_months,
                                     InflationPolicy policy) {
    if (!(initial_supply > 0.0) || !std::isfinite(initial_supply)) {
        throw DomainError("initial supply must be positive and finite");
    }
    if (horizon_months < 1) throw DomainError("horizon must be at least one month");

    SupplySchedule schedule;
    schedule.initial_supply = initial_supply;
    schedule.horizon_months = horizon_months;

    const int years = (horizon_months + kMonthsPerYear - 1) / kMonthsPerYear;
    schedule.yearly_rates.reserve(static_cast<std::size_t>(years));
    schedule.yearly_rewards.reserve(static_cast<std::size_t>(years));
    schedule.yearly_supplies.reserve(static_cast<std::size_t>(years) + 1);

    double supply = initial_supply;
    schedule.yearly_supplies.push_back(supply);
    for (int y = 0; y < years; ++y) {
        const double rate = yearly_inflation_rate(y, policy);
        const double next = supply + rate * supply;
        // next < 2 * supply, so this difference is exact and minting equals issuance bit for bit.
        const double reward = next - supply;
        schedule.yearly_rates.push_back(rate);
        schedule.yearly_rewards.push_back(reward);
        supply = next;
        schedule.yearly_supplies.push_back(supply);
    }

    schedule.monthly_rewards.reserve(static_cast<std::size_t>(horizon_months));
    for (int t = 0; t < horizon_months; ++t) {
        schedule.monthly_rewards.push_back(
            schedule.yearly_rewards[static_cast<std::size_t>(year_of_month(t))] / kMonthsPerYear);
    }
    return schedule;
}

}  // namespace nnssim
