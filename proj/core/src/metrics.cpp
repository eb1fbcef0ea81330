#include "nnssim/metrics.hpp"

#include <cerrno>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "nnssim/errors.hpp"
#include "nnssim/rewards.hpp"

namespace nnssim {

std::string_view to_string(NeuronStatus status) noexcept {
    switch (status) {
        case NeuronStatus::Liquid:
            return "liquid";
        case NeuronStatus::Staking:
            return "staking";
        case NeuronStatus::Dissolving:
            return "dissolving";
    }
    return "unknown";
}

MetricsFrame aggregate(std::span<const NeuronState> neurons, const SupplyContext& context) {
    MetricsFrame f;
    f.month = context.month;
    f.total_supply = context.total_supply;
    f.minted_this_month = context.minted_this_month;
    f.mean_realized_annualized_ratio = context.mean_realized_annualized_ratio;
    for (const auto& n : neurons) {
        f.tokens_liquid += n.liquid_balance;
        if (n.status == NeuronStatus::Staking) f.tokens_staking += n.stake;
        if (n.status == NeuronStatus::Dissolving) f.tokens_dissolving += n.stake;
        if (is_governor(n)) ++f.governor_count;
    }
    const double total = f.total_tokens();
    if (total > 0.0) {
        f.pct_liquid = f.tokens_liquid / total;
        f.pct_staking = f.tokens_staking / total;
        f.pct_dissolving = f.tokens_dissolving / total;
    }
    return f;
}

std::string format_number(double value) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

std::string metrics_to_csv(std::span<const MetricsFrame> frames) {
    std::string out = kMetricsCsvHeader;
    out += '\n';
    for (const auto& f : frames) {
        out += std::to_string(f.month);
        out += ',';
        out += std::to_string(f.governor_count);
        for (double v : {f.tokens_liquid, f.tokens_staking, f.tokens_dissolving, f.pct_liquid,
                         f.pct_staking, f.pct_dissolving, f.total_supply, f.minted_this_month,
                         f.mean_realized_annualized_ratio}) {
            out += ',';
            out += format_number(v);
        }
        out += '\n';
    }
    return out;
}

namespace {

double parse_double(const std::string& field, std::size_t line) {
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (field.empty() || *end != '\0' || errno == ERANGE) {
        throw DomainError("metrics csv line " + std::to_string(line) + ": bad number '" + field + "'");
    }
    return v;
}

long long parse_integer(const std::string& field, std::size_t line) {
    errno = 0;
    char* end = nullptr;
    const long long v = std::strtoll(field.c_str(), &end, 10);
    if (field.empty() || *end != '\0' || errno == ERANGE || v < 0) {
        throw DomainError("metrics csv line " + std::to_string(line) + ": bad integer '" + field + "'");
    }
    return v;
}

}  // namespace

std::vector<MetricsFrame> metrics_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != kMetricsCsvHeader) {
        throw DomainError("metrics csv: missing or unexpected header");
    }
    std::vector<MetricsFrame> frames;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::istringstream row(line);
        std::string field;
        while (std::getline(row, field, ',')) fields.push_back(field);
        if (fields.size() != 11) {
            throw DomainError("metrics csv line " + std::to_string(line_no) + ": expected 11 fields");
        }
        MetricsFrame f;
        f.month = static_cast<int>(parse_integer(fields[0], line_no));
        f.governor_count = static_cast<std::size_t>(parse_integer(fields[1], line_no));
        double* targets[] = {&f.tokens_liquid, &f.tokens_staking, &f.tokens_dissolving,
                             &f.pct_liquid,    &f.pct_staking,    &f.pct_dissolving,
                             &f.total_supply,  &f.minted_this_month,
                             &f.mean_realized_annualized_ratio};
        for (std::size_t k = 0; k < 9; ++k) *targets[k] = parse_double(fields[k + 2], line_no);
        frames.push_back(f);
    }
    return frames;
}

std::string metrics_to_json(std::span<const MetricsFrame> frames) {
    auto rows = nlohmann::ordered_json::array();
    for (const auto& f : frames) {
        nlohmann::ordered_json row;
        row["month"] = f.month;
        row["governor_count"] = f.governor_count;
        row["tokens_liquid"] = f.tokens_liquid;
        row["tokens_staking"] = f.tokens_staking;
        row["tokens_dissolving"] = f.tokens_dissolving;
        row["pct_liquid"] = f.pct_liquid;
        row["pct_staking"] = f.pct_staking;
        row["pct_dissolving"] = f.pct_dissolving;
        row["total_supply"] = f.total_supply;
        row["minted_this_month"] = f.minted_this_month;
        row["mean_realized_annualized_ratio"] = f.mean_realized_annualized_ratio;
        rows.push_back(std::move(row));
    }
    return rows.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& destination, const std::string& contents) {
    std::ofstream out(destination, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open for writing: " + destination.string());
    out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
    out.close();
    if (!out) throw IoError("write failed: " + destination.string());
}

std::string read_text_file(const std::filesystem::path& source) {
    std::ifstream in(source, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + source.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void export_csv(std::span<const MetricsFrame> frames, const std::filesystem::path& destination) {
    if (frames.empty()) throw DomainError("refusing to export an empty metrics series");
    write_text_file(destination, metrics_to_csv(frames));
}

void export_json(std::span<const MetricsFrame> frames, const std::filesystem::path& destination) {
    if (frames.empty()) throw DomainError("refusing to export an empty metrics series");
    write_text_file(destination, metrics_to_json(frames));
}

std::vector<MetricsFrame> import_csv(const std::filesystem::path& source) {
    return metrics_from_csv(read_text_file(source));
}

}  // namespace nnssim
