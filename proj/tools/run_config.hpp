#pragma once

// JSON run configuration.
//
//   {
//     "population": { "n_agents": 10000, "endowment_mean_log": 10.57, ... , "seed": 42 },
//     "policy":     { "preset": "s4_hybrid" }
//               or  { "inflation": "dynamic", "dissolve_curve": "full",
//                     "age_curve": "full", "initial_supply": 469e6 },
//     "simulation": { "horizon_months": 96, "shock_std_dev": 0.01, "shock_seed": 7 },
//     "output":     { "directory": "out", "formats": ["csv", "json", "svg"] }
//   }
//
// Every section and field is optional. Unknown fields are rejected.

#include <filesystem>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "nnssim/policy.hpp"
#include "nnssim/population.hpp"

namespace nnssim::cli {

struct OutputConfig {
    std::filesystem::path directory = "nnssim_out";
    std::vector<std::string> formats = {"csv", "json", "svg"};

    bool wants(std::string_view format) const;
};

struct RunConfig {
    PopulationConfig population;
    /// Preset name, or "custom" when the policy was spelled out field by field.
    std::string scenario_name = "s4_hybrid";
    PolicyConfig policy;
    OutputConfig output;
};

/// Throws ConfigError with the JSON path of the offending field.
RunConfig parse_run_config(const nlohmann::json& document);
/// Missing or unparsable files are configuration errors.
RunConfig load_run_config(const std::filesystem::path& path);

/// Splits "a,b,c", rejecting empty items.
std::vector<std::string> split_list(std::string_view text, std::string_view what);
std::vector<std::string> parse_formats(std::string_view text);

}  // namespace nnssim::cli
