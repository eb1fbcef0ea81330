#include <doctest.h>

#include <cmath>
#include <limits>

#include "nnssim/errors.hpp"
#include "nnssim/tokenomics.hpp"

using namespace nnssim;

namespace {

constexpr MultiplierPolicy kFull{DissolveCurve::FullLinearCurve, AgeCurve::FullLinearCurve};

bool within_ulps(double a, double b, double ulps) {
    return std::fabs(a - b) <= ulps * std::numeric_limits<double>::epsilon() * std::max(std::fabs(a), std::fabs(b));
}

}  // namespace

TEST_SUITE("tokenomics") {

TEST_CASE("dissolve delay multiplier endpoints") {
    CHECK(dissolve_delay_multiplier(5, DissolveCurve::FullLinearCurve) == 0.0);
    CHECK(dissolve_delay_multiplier(5.999, DissolveCurve::FullLinearCurve) == 0.0);
    CHECK(dissolve_delay_multiplier(6, DissolveCurve::FullLinearCurve) == 1.0625);
    CHECK(dissolve_delay_multiplier(48, DissolveCurve::FullLinearCurve) == 1.5);
    CHECK(dissolve_delay_multiplier(96, DissolveCurve::FullLinearCurve) == 2.0);
    CHECK(dissolve_delay_multiplier(200, DissolveCurve::FullLinearCurve) == 2.0);
}

TEST_CASE("fixed dissolve multiplier ignores delay above the floor") {
    for (int d : {6, 12, 18, 96, 120}) {
        CHECK(dissolve_delay_multiplier(d, DissolveCurve::FixedAtSixMonthValue) == 1.0625);
    }
    CHECK(dissolve_delay_multiplier(0, DissolveCurve::FixedAtSixMonthValue) == 0.0);
    CHECK(dissolve_delay_multiplier(5, DissolveCurve::FixedAtSixMonthValue) == 0.0);
}

TEST_CASE("age multiplier") {
    CHECK(age_multiplier(0, AgeCurve::FullLinearCurve) == 1.0);
    CHECK(age_multiplier(24, AgeCurve::FullLinearCurve) == 1.125);
    CHECK(age_multiplier(48, AgeCurve::FullLinearCurve) == 1.25);
    CHECK(age_multiplier(96, AgeCurve::FullLinearCurve) == 1.25);
    for (int a : {0, 7, 48, 500}) CHECK(age_multiplier(a, AgeCurve::Disabled) == 1.0);
}

TEST_CASE("negative inputs are domain errors") {
    CHECK_THROWS_AS(dissolve_delay_multiplier(-1, DissolveCurve::FullLinearCurve), DomainError);
    CHECK_THROWS_AS(age_multiplier(-0.5, AgeCurve::FullLinearCurve), DomainError);
    CHECK_THROWS_AS(voting_power(-1, 12, 0, kFull), DomainError);
    CHECK_THROWS_AS(voting_power(1, -12, 0, kFull), DomainError);
    CHECK_THROWS_AS(yearly_inflation_rate(-1, InflationPolicy::DynamicQuadratic), DomainError);
    CHECK_THROWS_AS(dissolve_delay_multiplier(std::nan(""), DissolveCurve::FullLinearCurve), DomainError);
}

TEST_CASE("voting power") {
    CHECK(voting_power(100, 96, 48, kFull) == 250.0);
    CHECK(voting_power(100, 5, 48, kFull) == 0.0);
    CHECK(voting_power(0, 96, 48, kFull) == 0.0);
}

TEST_CASE("multiplier curve shape over a fine grid") {
    double prev_d = 0.0;
    double prev_a = 1.0;
    for (int i = 0; i <= 1500; ++i) {
        const double m = i * 0.1;
        const double d = dissolve_delay_multiplier(m, DissolveCurve::FullLinearCurve);
        const double a = age_multiplier(m, AgeCurve::FullLinearCurve);
        if (m < 6.0) CHECK(d == 0.0);
        CHECK(d >= prev_d);
        CHECK(a >= prev_a);
        CHECK(d <= 2.0);
        CHECK(a <= 1.25);
        if (m >= 96.0) CHECK(d == 2.0);
        if (m >= 48.0) CHECK(a == 1.25);
        prev_d = d;
        prev_a = a;
    }
}

TEST_CASE("yearly inflation rate") {
    using enum InflationPolicy;
    CHECK(yearly_inflation_rate(0, DynamicQuadratic) == doctest::Approx(0.10).epsilon(1e-12));
    CHECK(yearly_inflation_rate(1, DynamicQuadratic) == doctest::Approx(0.08828125).epsilon(1e-12));
    CHECK(yearly_inflation_rate(2, DynamicQuadratic) == doctest::Approx(0.078125).epsilon(1e-12));
    CHECK(yearly_inflation_rate(4, DynamicQuadratic) == doctest::Approx(0.0625).epsilon(1e-12));
    CHECK(yearly_inflation_rate(8, DynamicQuadratic) == 0.05);
    CHECK(yearly_inflation_rate(3, ConstantFivePercent) == 0.05);
    for (int y = 0; y < 40; ++y) {
        const double r = yearly_inflation_rate(y, DynamicQuadratic);
        CHECK(r >= 0.05);
        CHECK(r <= 0.10);
        CHECK(yearly_inflation_rate(y + 1, DynamicQuadratic) <= r);
        if (y >= 8) CHECK(r == 0.05);
        CHECK(yearly_inflation_rate(y, ConstantFivePercent) == 0.05);
    }
}

TEST_CASE("supply schedule for one year") {
    const auto s = build_supply_schedule(469e6, 12, InflationPolicy::DynamicQuadratic);
    REQUIRE(s.years() == 1);
    REQUIRE(s.monthly_rewards.size() == 12);
    CHECK(s.yearly_rewards[0] == doctest::Approx(46.9e6).epsilon(1e-12));
    CHECK(s.yearly_supplies[1] == doctest::Approx(515.9e6).epsilon(1e-12));
    for (double r : s.monthly_rewards) CHECK(r == doctest::Approx(3.9083333e6).epsilon(1e-7));
}

TEST_CASE("supply schedule invariants") {
    for (auto policy : {InflationPolicy::DynamicQuadratic, InflationPolicy::ConstantFivePercent}) {
        const auto s = build_supply_schedule(469e6, 130, policy);
        REQUIRE(s.years() == 11);  // ceil(130 / 12)
        REQUIRE(s.yearly_supplies.size() == 12);
        REQUIRE(s.monthly_rewards.size() == 130);
        for (std::size_t y = 0; y < s.years(); ++y) {
            const double direct = s.yearly_rates[y] * s.yearly_supplies[y];
            CHECK(std::fabs(s.yearly_rewards[y] - direct) <= 1e-14 * direct);
            CHECK(s.yearly_supplies[y + 1] - s.yearly_supplies[y] == s.yearly_rewards[y]);
            CHECK(within_ulps(s.yearly_supplies[y + 1], (1.0 + s.yearly_rates[y]) * s.yearly_supplies[y], 4));
            CHECK(s.yearly_supplies[y + 1] > s.yearly_supplies[y]);
            if ((y + 1) * 12 <= 130) {
                double sum = 0.0;
                for (std::size_t m = y * 12; m < (y + 1) * 12; ++m) sum += s.monthly_rewards[m];
                CHECK(std::fabs(sum - s.yearly_rewards[y]) <= 1e-12 * s.yearly_rewards[y]);
            }
        }
        for (int t = 0; t < 130; ++t) {
            CHECK(s.monthly_reward(t) == s.yearly_rewards[static_cast<std::size_t>(t / 12)] / 12);
            CHECK(s.supply_for_month(t) == s.yearly_supplies[static_cast<std::size_t>(t / 12)]);
        }
        CHECK_THROWS_AS(s.monthly_reward(130), DomainError);
    }
}

TEST_CASE("year eight and beyond stay at five percent") {
    const auto s = build_supply_schedule(469e6, 108, InflationPolicy::DynamicQuadratic);
    REQUIRE(s.years() == 9);
    CHECK(s.yearly_rates[8] == 0.05);
    const auto longer = build_supply_schedule(469e6, 240, InflationPolicy::DynamicQuadratic);
    for (std::size_t y = 8; y < longer.years(); ++y) CHECK(longer.yearly_rates[y] == 0.05);
}

TEST_CASE("schedule rejects bad inputs") {
    CHECK_THROWS_AS(build_supply_schedule(0, 12, InflationPolicy::DynamicQuadratic), DomainError);
    CHECK_THROWS_AS(build_supply_schedule(-5, 12, InflationPolicy::DynamicQuadratic), DomainError);
    CHECK_THROWS_AS(build_supply_schedule(469e6, 0, InflationPolicy::DynamicQuadratic), DomainError);
}

}
