#include "nnssim/scenarios.hpp"

#include <array>
#include <cmath>
#include <exception>
#include <future>

#include "nnssim/errors.hpp"

namespace nnssim {

void PolicyConfig::validate() const {
    if (!(initial_supply > 0.0) || !std::isfinite(initial_supply)) {
        throw ConfigError("policy.initial_supply: must be positive");
    }
    if (horizon_months < 1) throw ConfigError("simulation.horizon_months: must be at least 1");
    if (!(shock_std_dev >= 0.0) || !std::isfinite(shock_std_dev)) {
        throw ConfigError("simulation.shock_std_dev: must be non-negative");
    }
}

namespace {

constexpr std::array<std::string_view, 5> kPresetNames = {
    "benchmark", "s1_inflation", "s2_dissolve", "s3_age", "s4_hybrid",
};

struct PresetFlags {
    InflationPolicy inflation;
    DissolveCurve dissolve;
    AgeCurve age;
};

constexpr std::array<PresetFlags, 5> kPresetFlags = {{
    {InflationPolicy::ConstantFivePercent, DissolveCurve::FixedAtSixMonthValue, AgeCurve::Disabled},
    {InflationPolicy::DynamicQuadratic, DissolveCurve::FixedAtSixMonthValue, AgeCurve::Disabled},
    {InflationPolicy::ConstantFivePercent, DissolveCurve::FullLinearCurve, AgeCurve::Disabled},
    {InflationPolicy::ConstantFivePercent, DissolveCurve::FixedAtSixMonthValue,
     AgeCurve::FullLinearCurve},
    {InflationPolicy::DynamicQuadratic, DissolveCurve::FullLinearCurve, AgeCurve::FullLinearCurve},
}};

}  // namespace

std::span<const std::string_view> preset_names() noexcept { return kPresetNames; }

PolicyConfig apply_preset(std::string_view name, PolicyConfig base) {
    for (std::size_t i = 0; i < kPresetNames.size(); ++i) {
        if (kPresetNames[i] != name) continue;
        base.inflation = kPresetFlags[i].inflation;
        base.multipliers = MultiplierPolicy{kPresetFlags[i].dissolve, kPresetFlags[i].age};
        return base;
    }
    std::string valid;
    for (auto n : kPresetNames) {
        if (!valid.empty()) valid += ", ";
        valid += n;
    }
    throw ConfigError("policy.preset: unknown preset '" + std::string(name) + "' (valid: " + valid + ")");
}

PolicyConfig preset(std::string_view name) { return apply_preset(name, PolicyConfig{}); }

ScenarioSummary summarize_frames(std::span<const MetricsFrame> frames) {
    ScenarioSummary s;
    if (frames.empty()) return s;
    double sum = 0.0;
    for (const auto& f : frames) sum += f.staking_ratio();
    s.mean_staking_ratio = sum / static_cast<double>(frames.size());

    if (frames.size() > 1) {
        std::vector<double> changes;
        changes.reserve(frames.size() - 1);
        for (std::size_t i = 1; i < frames.size(); ++i) {
            changes.push_back(frames[i].staking_ratio() - frames[i - 1].staking_ratio());
        }
        double mean = 0.0;
        for (double c : changes) mean += c;
        mean /= static_cast<double>(changes.size());
        double sq = 0.0;
        for (double c : changes) sq += (c - mean) * (c - mean);
        s.staking_ratio_volatility = std::sqrt(sq / static_cast<double>(changes.size()));
    }
    s.final_governor_count = frames.back().governor_count;
    s.final_supply = frames.back().total_supply;
    return s;
}

ScenarioResult run_scenario(std::string name, std::span<const AgentProfile> profiles,
                            const PolicyConfig& policy, const ShockSeries& shocks) {
    ScenarioResult result;
    result.name = std::move(name);
    result.policy = policy;
    result.frames = run_simulation(profiles, policy, policy.horizon_months, shocks);
    result.summary = summarize_frames(result.frames);
    return result;
}

std::vector<ScenarioResult> run_comparative(std::span<const std::string> presets,
                                            std::span<const AgentProfile> profiles,
                                            const PolicyConfig& base, const ShockSeries& shocks) {
    if (presets.empty()) throw ConfigError("presets: at least one preset is required");
    // Resolve every name up front so a typo fails before any work starts.
    std::vector<PolicyConfig> policies;
    policies.reserve(presets.size());
    for (const auto& name : presets) policies.push_back(apply_preset(name, base));

    std::vector<std::future<ScenarioResult>> pending;
    pending.reserve(presets.size());
    for (std::size_t i = 0; i < presets.size(); ++i) {
        pending.push_back(std::async(std::launch::async, [&, i] {
            return run_scenario(presets[i], profiles, policies[i], shocks);
        }));
    }
    std::vector<ScenarioResult> results;
    results.reserve(presets.size());
    std::exception_ptr failure;
    std::string failed_name;
    for (std::size_t i = 0; i < pending.size(); ++i) {
        try {
            results.push_back(pending[i].get());
        } catch (...) {
            if (!failure) {
                failure = std::current_exception();
                failed_name = presets[i];
            }
        }
    }
    if (failure) {
        try {
            std::rethrow_exception(failure);
        } catch (const ConfigError& e) {
            throw ConfigError("scenario " + failed_name + ": " + e.what());
        } catch (const std::exception& e) {
            throw std::runtime_error("scenario " + failed_name + ": " + e.what());
        }
    }
    return results;
}

std::vector<ScenarioResult> run_comparative(std::span<const std::string> presets,
                                            PopulationConfig population, const PolicyConfig& base) {
    base.validate();
    population.seed = base.population_seed;
    const auto profiles = sample_population(population);
    const auto shocks = generate_shocks(base.horizon_months, base.shock_std_dev, base.shock_seed);
    return run_comparative(presets, profiles, base, shocks);
}

std::string comparison_summary_csv(std::span<const ScenarioResult> results) {
    std::string out = "scenario,mean_staking_ratio,staking_ratio_volatility,final_supply,final_governor_count\n";
    for (const auto& r : results) {
        out += r.name;
        out += ',' + format_number(r.summary.mean_staking_ratio);
        out += ',' + format_number(r.summary.staking_ratio_volatility);
        out += ',' + format_number(r.summary.final_supply);
        out += ',' + std::to_string(r.summary.final_governor_count);
        out += '\n';
    }
    return out;
}

}  // namespace nnssim
