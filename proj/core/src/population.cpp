#include "nnssim/population.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "nnssim/errors.hpp"
#include "nnssim/random.hpp"

namespace nnssim {

namespace {

void require(bool ok, const char* field, const char* rule) {
    if (!ok) throw ConfigError(std::string("population.") + field + ": " + rule);
}

FeatureSummary summarize(std::string_view feature, std::span<const double> values) {
    FeatureSummary s;
    s.feature = feature;
    const auto n = static_cast<double>(values.size());
    s.total = std::accumulate(values.begin(), values.end(), 0.0);
    s.mean = s.total / n;
    double sq = 0.0;
    for (double v : values) sq += (v - s.mean) * (v - s.mean);
    s.std_dev = std::sqrt(sq / n);
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    s.min = *lo;
    s.max = *hi;

    double range_lo = s.min;
    double range_hi = s.max;
    if (range_hi <= range_lo) {
        range_lo -= 0.5;
        range_hi += 0.5;
    }
    const double width = (range_hi - range_lo) / kHistogramBins;
    for (std::size_t b = 0; b < kHistogramBins; ++b) {
        s.histogram[b].lo = range_lo + width * static_cast<double>(b);
        s.histogram[b].hi = b + 1 == kHistogramBins ? range_hi
                                                    : range_lo + width * static_cast<double>(b + 1);
    }
    for (double v : values) {
        auto bin = static_cast<std::size_t>((v - range_lo) / width);
        bin = std::min(bin, kHistogramBins - 1);
        ++s.histogram[bin].count;
    }
    return s;
}

}  // namespace

void PopulationConfig::validate() const {
    require(n_agents >= 1, "n_agents", "must be at least 1");
    require(std::isfinite(endowment_mean_log), "endowment_mean_log", "must be finite");
    require(endowment_sigma_log > 0.0 && std::isfinite(endowment_sigma_log), "endowment_sigma_log",
            "must be positive");
    require(threshold_k > 0.0 && std::isfinite(threshold_k), "threshold_k", "must be positive");
    require(threshold_theta > 0.0 && std::isfinite(threshold_theta), "threshold_theta",
            "must be positive");
    require(std::isfinite(liq_mean1), "liq_mean1", "must be finite");
    require(std::isfinite(liq_mean2), "liq_mean2", "must be finite");
    require(liq_std_dev > 0.0 && std::isfinite(liq_std_dev), "liq_std_dev", "must be positive");
    require(mixture_weight >= 0.0 && mixture_weight <= 1.0, "mixture_weight", "must lie in [0, 1]");
}

std::vector<AgentProfile> sample_population(const PopulationConfig& config) {
    config.validate();
    Xoshiro256StarStar rng(config.seed);
    std::vector<AgentProfile> profiles;
    profiles.reserve(config.n_agents);
    for (std::size_t id = 0; id < config.n_agents; ++id) {
        AgentProfile p;
        p.agent_id = id;
        p.endowment = rng.log_normal(config.endowment_mean_log, config.endowment_sigma_log);
        p.staking_threshold = rng.gamma(config.threshold_k, config.threshold_theta);
        const bool first = rng.uniform() < config.mixture_weight;
        const double raw = rng.normal(first ? config.liq_mean1 : config.liq_mean2, config.liq_std_dev);
        const double clamped = std::clamp(raw, static_cast<double>(kMinLiquidityPreference),
                                          static_cast<double>(kMaxLiquidityPreference));
        p.liquidity_preference = static_cast<int>(std::lround(clamped));
        profiles.push_back(p);
    }
    return profiles;
}

PopulationSummary population_summary(std::span<const AgentProfile> profiles) {
    if (profiles.empty()) throw DomainError("population summary needs at least one agent");
    std::vector<double> endowments, thresholds, preferences;
    endowments.reserve(profiles.size());
    thresholds.reserve(profiles.size());
    preferences.reserve(profiles.size());
    for (const auto& p : profiles) {
        endowments.push_back(p.endowment);
        thresholds.push_back(p.staking_threshold);
        preferences.push_back(static_cast<double>(p.liquidity_preference));
    }
    PopulationSummary summary;
    summary.n_agents = profiles.size();
    summary.endowment = summarize("endowment", endowments);
    summary.threshold = summarize("staking_threshold", thresholds);
    summary.liquidity_preference = summarize("liquidity_preference", preferences);
    return summary;
}

}  // namespace nnssim
