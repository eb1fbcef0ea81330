#include "run_config.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <initializer_list>

#include "nnssim/errors.hpp"
#include "nnssim/scenarios.hpp"

namespace nnssim::cli {

namespace {

using nlohmann::json;

constexpr std::array<std::string_view, 3> kFormats = {"csv", "json", "svg"};

[[noreturn]] void fail(const std::string& path, const std::string& message) {
    throw ConfigError(path + ": " + message);
}

void reject_unknown(const json& section, const std::string& path,
                    std::initializer_list<std::string_view> known) {
    if (!section.is_object()) fail(path, "expected an object");
    for (const auto& [key, value] : section.items()) {
        if (std::find(known.begin(), known.end(), key) == known.end()) {
            fail(path + "." + key, "unknown field");
        }
    }
}

double number_field(const json& section, const std::string& path, const char* key, double fallback) {
    if (!section.contains(key)) return fallback;
    const auto& v = section.at(key);
    if (!v.is_number()) fail(path + "." + key, "expected a number");
    return v.get<double>();
}

std::uint64_t unsigned_field(const json& section, const std::string& path, const char* key,
                             std::uint64_t fallback) {
    if (!section.contains(key)) return fallback;
    const auto& v = section.at(key);
    if (v.is_number_unsigned()) return v.get<std::uint64_t>();
    if (v.is_number_integer()) {
        if (v.get<std::int64_t>() < 0) fail(path + "." + key, "must be non-negative");
        return static_cast<std::uint64_t>(v.get<std::int64_t>());
    }
    fail(path + "." + key, "expected a non-negative integer");
}

std::string string_field(const json& section, const std::string& path, const char* key,
                         std::string fallback) {
    if (!section.contains(key)) return fallback;
    const auto& v = section.at(key);
    if (!v.is_string()) fail(path + "." + key, "expected a string");
    return v.get<std::string>();
}

void parse_population(const json& section, PopulationConfig& pop) {
    const std::string path = "population";
    reject_unknown(section, path,
                   {"n_agents", "endowment_mean_log", "endowment_sigma_log", "threshold_k",
                    "threshold_theta", "liq_mean1", "liq_mean2", "liq_std_dev", "mixture_weight", "seed"});
    pop.n_agents = unsigned_field(section, path, "n_agents", pop.n_agents);
    pop.endowment_mean_log = number_field(section, path, "endowment_mean_log", pop.endowment_mean_log);
    pop.endowment_sigma_log = number_field(section, path, "endowment_sigma_log", pop.endowment_sigma_log);
    pop.threshold_k = number_field(section, path, "threshold_k", pop.threshold_k);
    pop.threshold_theta = number_field(section, path, "threshold_theta", pop.threshold_theta);
    pop.liq_mean1 = number_field(section, path, "liq_mean1", pop.liq_mean1);
    pop.liq_mean2 = number_field(section, path, "liq_mean2", pop.liq_mean2);
    pop.liq_std_dev = number_field(section, path, "liq_std_dev", pop.liq_std_dev);
    pop.mixture_weight = number_field(section, path, "mixture_weight", pop.mixture_weight);
    pop.seed = unsigned_field(section, path, "seed", pop.seed);
}

InflationPolicy parse_inflation(const std::string& text, const std::string& path) {
    if (text == "dynamic") return InflationPolicy::DynamicQuadratic;
    if (text == "constant") return InflationPolicy::ConstantFivePercent;
    fail(path, "expected 'dynamic' or 'constant', got '" + text + "'");
}

void parse_policy(const json& section, RunConfig& config) {
    const std::string path = "policy";
    reject_unknown(section, path, {"preset", "inflation", "dissolve_curve", "age_curve", "initial_supply"});
    if (section.contains("preset")) {
        for (const char* key : {"inflation", "dissolve_curve", "age_curve", "initial_supply"}) {
            if (section.contains(key)) {
                fail(path + "." + key, "cannot be combined with policy.preset");
            }
        }
        config.scenario_name = string_field(section, path, "preset", "");
        config.policy = apply_preset(config.scenario_name, config.policy);
        return;
    }
    config.scenario_name = "custom";
    auto& p = config.policy;
    p.inflation = parse_inflation(string_field(section, path, "inflation", "dynamic"), path + ".inflation");

    const auto dissolve = string_field(section, path, "dissolve_curve", "full");
    if (dissolve == "full") {
        p.multipliers.dissolve = DissolveCurve::FullLinearCurve;
    } else if (dissolve == "fixed") {
        p.multipliers.dissolve = DissolveCurve::FixedAtSixMonthValue;
    } else {
        fail(path + ".dissolve_curve", "expected 'full' or 'fixed', got '" + dissolve + "'");
    }

    const auto age = string_field(section, path, "age_curve", "full");
    if (age == "full") {
        p.multipliers.age = AgeCurve::FullLinearCurve;
    } else if (age == "disabled") {
        p.multipliers.age = AgeCurve::Disabled;
    } else {
        fail(path + ".age_curve", "expected 'full' or 'disabled', got '" + age + "'");
    }
    p.initial_supply = number_field(section, path, "initial_supply", p.initial_supply);
}

void parse_simulation(const json& section, PolicyConfig& policy) {
    const std::string path = "simulation";
    reject_unknown(section, path, {"horizon_months", "shock_std_dev", "shock_seed"});
    const auto horizon = unsigned_field(section, path, "horizon_months",
                                        static_cast<std::uint64_t>(policy.horizon_months));
    if (horizon > 100'000) fail(path + ".horizon_months", "unreasonably large");
    policy.horizon_months = static_cast<int>(horizon);
    policy.shock_std_dev = number_field(section, path, "shock_std_dev", policy.shock_std_dev);
    policy.shock_seed = unsigned_field(section, path, "shock_seed", policy.shock_seed);
}

void parse_output(const json& section, OutputConfig& output) {
    const std::string path = "output";
    reject_unknown(section, path, {"directory", "formats"});
    output.directory = string_field(section, path, "directory", output.directory.string());
    if (section.contains("formats")) {
        const auto& f = section.at("formats");
        if (!f.is_array()) fail(path + ".formats", "expected an array of strings");
        output.formats.clear();
        for (std::size_t i = 0; i < f.size(); ++i) {
            const std::string item_path = path + ".formats[" + std::to_string(i) + "]";
            if (!f[i].is_string()) fail(item_path, "expected a string");
            const auto name = f[i].get<std::string>();
            if (std::find(kFormats.begin(), kFormats.end(), name) == kFormats.end()) {
                fail(item_path, "unknown format '" + name + "' (valid: csv, json, svg)");
            }
            output.formats.push_back(name);
        }
    }
}

}  // namespace

bool OutputConfig::wants(std::string_view format) const {
    return std::find(formats.begin(), formats.end(), format) != formats.end();
}

RunConfig parse_run_config(const json& document) {
    if (!document.is_object()) throw ConfigError("(root): expected a JSON object");
    reject_unknown(document, "(root)", {"population", "policy", "simulation", "output"});
    RunConfig config;
    config.policy = preset(config.scenario_name);
    if (document.contains("population")) parse_population(document.at("population"), config.population);
    if (document.contains("policy")) parse_policy(document.at("policy"), config);
    if (document.contains("simulation")) parse_simulation(document.at("simulation"), config.policy);
    if (document.contains("output")) parse_output(document.at("output"), config.output);
    config.policy.population_seed = config.population.seed;
    return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config: cannot read '" + path.string() + "'");
    json document;
    try {
        document = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ConfigError("config: '" + path.string() + "' is not valid JSON: " + e.what());
    }
    return parse_run_config(document);
}

std::vector<std::string> split_list(std::string_view text, std::string_view what) {
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto end = std::min(text.find(',', start), text.size());
        const auto item = text.substr(start, end - start);
        if (item.empty()) throw ConfigError(std::string(what) + ": empty list item");
        items.emplace_back(item);
        start = end + 1;
    }
    return items;
}

std::vector<std::string> parse_formats(std::string_view text) {
    auto formats = split_list(text, "--format");
    for (const auto& f : formats) {
        if (std::find(kFormats.begin(), kFormats.end(), f) == kFormats.end()) {
            throw ConfigError("--format: unknown format '" + f + "' (valid: csv, json, svg)");
        }
    }
    return formats;
}

}  // namespace nnssim::cli
