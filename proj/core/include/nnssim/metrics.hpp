#pragma once

#include <cstddef>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "nnssim/neuron.hpp"

namespace nnssim {

/// Month-end aggregates of one simulation step.
struct MetricsFrame {
    int month = 0;
    std::size_t governor_count = 0;
    double tokens_liquid = 0.0;
    double tokens_staking = 0.0;
    double tokens_dissolving = 0.0;
    double pct_liquid = 0.0;
    double pct_staking = 0.0;
    double pct_dissolving = 0.0;
    double total_supply = 0.0;
    double minted_this_month = 0.0;
    double mean_realized_annualized_ratio = 0.0;

    double total_tokens() const noexcept { return tokens_liquid + tokens_staking + tokens_dissolving; }
    /// Staked tokens as a fraction of total supply.
    double staking_ratio() const noexcept {
        return total_supply > 0.0 ? tokens_staking / total_supply : 0.0;
    }

    friend bool operator==(const MetricsFrame&, const MetricsFrame&) = default;
};

/// Context that cannot be read off the neurons themselves.
struct SupplyContext {
    int month = 0;
    double total_supply = 0.0;
    double minted_this_month = 0.0;
    double mean_realized_annualized_ratio = 0.0;
};

/// Liquid balances of every neuron count as liquid tokens; stakes count under
/// their neuron's status. Percentages are all zero when there are no tokens.
MetricsFrame aggregate(std::span<const NeuronState> neurons, const SupplyContext& context);

/// Column order of the metrics CSV.
inline constexpr const char* kMetricsCsvHeader =
    "month,governor_count,tokens_liquid,tokens_staking,tokens_dissolving,pct_liquid,pct_staking,"
    "pct_dissolving,total_supply,minted_this_month,mean_realized_annualized_ratio";

/// Shortest-safe text form: %.17g, which round-trips every double.
std::string format_number(double value);

std::string metrics_to_csv(std::span<const MetricsFrame> frames);
std::vector<MetricsFrame> metrics_from_csv(const std::string& text);
std::string metrics_to_json(std::span<const MetricsFrame> frames);

/// Throws DomainError on an empty frame list (nothing is written) and
/// IoError when the destination cannot be written.
void export_csv(std::span<const MetricsFrame> frames, const std::filesystem::path& destination);
void export_json(std::span<const MetricsFrame> frames, const std::filesystem::path& destination);
std::vector<MetricsFrame> import_csv(const std::filesystem::path& source);

/// Writes `contents` to `destination` in binary mode, throwing IoError on failure.
void write_text_file(const std::filesystem::path& destination, const std::string& contents);
std::string read_text_file(const std::filesystem::path& source);

}  // namespace nnssim
