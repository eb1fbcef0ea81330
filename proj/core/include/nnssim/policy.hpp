#pragma once

#include <cstdint>

#include "nnssim/tokenomics.hpp"

namespace nnssim {

inline constexpr double kGenesisSupply = 469e6;
inline constexpr int kDefaultHorizonMonths = 96;
inline constexpr double kDefaultShockStdDev = 0.01;

/// Everything that parameterizes one simulation run apart from the agents.
struct PolicyConfig {
    InflationPolicy inflation = InflationPolicy::DynamicQuadratic;
    MultiplierPolicy multipliers{};
    double initial_supply = kGenesisSupply;
    int horizon_months = kDefaultHorizonMonths;
    double shock_std_dev = kDefaultShockStdDev;
    std::uint64_t population_seed = 20210510;
    std::uint64_t shock_seed = 7;

    /// Throws ConfigError naming the offending field.
    void validate() const;

    friend bool operator==(const PolicyConfig&, const PolicyConfig&) = default;
};

}  // namespace nnssim
