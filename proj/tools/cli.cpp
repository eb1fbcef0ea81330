#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <optional>
#include <ostream>
#include <set>

#include "nnssim/charts.hpp"
#include "nnssim/errors.hpp"
#include "nnssim/rewards.hpp"
#include "nnssim/scenarios.hpp"
#include "run_config.hpp"

namespace nnssim::cli {

namespace fs = std::filesystem;

namespace {

struct GlobalFlags {
    std::optional<std::string> output_dir;
    std::optional<std::uint64_t> seed_population;
    std::optional<std::uint64_t> seed_shocks;
    std::optional<std::string> format;

    void apply(RunConfig& config) const {
        if (output_dir) config.output.directory = *output_dir;
        if (seed_population) config.population.seed = *seed_population;
        if (seed_shocks) config.policy.shock_seed = *seed_shocks;
        if (format) config.output.formats = parse_formats(*format);
        config.policy.population_seed = config.population.seed;
    }
};

void ensure_directory(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec || !fs::is_directory(dir)) {
        throw IoError("cannot create output directory " + dir.string() +
                      (ec ? ": " + ec.message() : std::string{}));
    }
}

// ---------------------------------------------------------------- calc

struct CalcArgs {
    std::string kind;
    std::optional<double> delay, age, stake, pool, aggregate;
    std::string dissolve_curve = "full";
    std::string age_curve = "full";
};

double required(const std::optional<double>& value, const char* flag, const std::string& kind) {
    if (!value) throw ConfigError("calc " + kind + ": missing required flag " + flag);
    return *value;
}

int cmd_calc(const CalcArgs& args, std::ostream& out) {
    MultiplierPolicy policy;
    policy.dissolve = args.dissolve_curve == "fixed" ? DissolveCurve::FixedAtSixMonthValue
                                                     : DissolveCurve::FullLinearCurve;
    policy.age = args.age_curve == "disabled" ? AgeCurve::Disabled : AgeCurve::FullLinearCurve;

    out << "kind: " << args.kind << '\n';
    if (args.kind == "dissolve") {
        const double delay = required(args.delay, "--delay", args.kind);
        const double value = dissolve_delay_multiplier(delay, policy.dissolve);
        out << "delay_months: " << format_number(delay) << '\n';
        out << "dissolve_multiplier: " << format_number(value) << '\n';
    } else if (args.kind == "age") {
        const double age = required(args.age, "--age", args.kind);
        const double value = age_multiplier(age, policy.age);
        out << "age_months: " << format_number(age) << '\n';
        out << "age_multiplier: " << format_number(value) << '\n';
    } else if (args.kind == "voting-power") {
        const double stake = required(args.stake, "--stake", args.kind);
        const double delay = required(args.delay, "--delay", args.kind);
        const double age = args.age.value_or(0.0);
        const double value = voting_power(stake, delay, age, policy);
        out << "stake: " << format_number(stake) << '\n';
        out << "delay_months: " << format_number(delay) << '\n';
        out << "age_months: " << format_number(age) << '\n';
        out << "voting_power: " << format_number(value) << '\n';
    } else {
        const double delay = required(args.delay, "--delay", args.kind);
        const double pool = required(args.pool, "--pool", args.kind);
        const double aggregate = required(args.aggregate, "--aggregate", args.kind);
        if (pool < 0.0) throw DomainError("--pool must be non-negative");
        if (aggregate < 0.0) throw DomainError("--aggregate must be non-negative");
        const double value = estimated_annualized_ratio(delay, aggregate, pool, policy);
        out << "delay_months: " << format_number(delay) << '\n';
        out << "pool: " << format_number(pool) << '\n';
        out << "aggregate: " << format_number(aggregate) << '\n';
        out << "estimated_annualized_ratio: " << format_number(value) << '\n';
    }
    return kExitOk;
}

// ---------------------------------------------------------------- schedule

struct ScheduleArgs {
    double initial_supply = kGenesisSupply;
    int years = 9;
    std::string policy = "dynamic";
    std::optional<std::string> csv;
};

int cmd_schedule(const ScheduleArgs& args, std::ostream& out) {
    if (args.years < 1) throw ConfigError("--years: must be at least 1");
    const auto inflation = args.policy == "constant" ? InflationPolicy::ConstantFivePercent
                                                     : InflationPolicy::DynamicQuadratic;
    const auto schedule = build_supply_schedule(args.initial_supply, args.years * kMonthsPerYear, inflation);
    std::string table = "year,inflation_rate,supply,yearly_reward,monthly_reward\n";
    for (std::size_t y = 0; y < schedule.years(); ++y) {
        table += std::to_string(y) + ',' + format_number(schedule.yearly_rates[y]) + ',' +
                 format_number(schedule.yearly_supplies[y]) + ',' + format_number(schedule.yearly_rewards[y]) +
                 ',' + format_number(schedule.yearly_rewards[y] / kMonthsPerYear) + '\n';
    }
    out << table;
    if (args.csv) write_text_file(*args.csv, table);
    return kExitOk;
}

// ---------------------------------------------------------------- sample

int cmd_sample(const std::optional<std::string>& config_path, const GlobalFlags& globals, std::ostream& out) {
    RunConfig config = config_path ? load_run_config(*config_path) : parse_run_config(nlohmann::json::object());
    globals.apply(config);
    const auto profiles = sample_population(config.population);
    const auto summary = population_summary(profiles);

    const fs::path dir = config.output.directory;
    ensure_directory(dir);

    std::string population = "agent_id,endowment,threshold,liquidity_preference\n";
    for (const auto& p : profiles) {
        population += std::to_string(p.agent_id) + ',' + format_number(p.endowment) + ',' +
                      format_number(p.staking_threshold) + ',' + std::to_string(p.liquidity_preference) + '\n';
    }
    write_text_file(dir / "population.csv", population);

    std::string histograms = "feature,bin_lo,bin_hi,count\n";
    for (const auto* feature : summary.features()) {
        for (const auto& bin : feature->histogram) {
            histograms += std::string(feature->feature) + ',' + format_number(bin.lo) + ',' +
                          format_number(bin.hi) + ',' + std::to_string(bin.count) + '\n';
        }
    }
    write_text_file(dir / "population_histograms.csv", histograms);
    emit_chart(ChartKind::PopulationHistograms, ChartInput{.population = &summary},
               dir / "population_histograms.svg");

    out << "agents: " << summary.n_agents << '\n';
    for (const auto* feature : summary.features()) {
        out << feature->feature << ": total=" << format_number(feature->total)
            << " mean=" << format_number(feature->mean) << " std_dev=" << format_number(feature->std_dev)
            << '\n';
    }
    out << "wrote " << (dir / "population.csv").string() << '\n';
    return kExitOk;
}

// ---------------------------------------------------------------- run / compare

void write_scenario_outputs(const ScenarioResult& result, const OutputConfig& output, const fs::path& dir) {
    ensure_directory(dir);
    if (output.wants("csv")) export_csv(result.frames, dir / "metrics.csv");
    if (output.wants("json")) export_json(result.frames, dir / "metrics.json");
    if (output.wants("svg")) {
        const auto schedule = build_supply_schedule(result.policy.initial_supply, result.policy.horizon_months,
                                                    result.policy.inflation);
        const ChartInput input{.frames = result.frames, .schedule = &schedule, .subtitle = result.name};
        for (auto kind : {ChartKind::GovernorCounts, ChartKind::TokenPercentages, ChartKind::InflationSupply,
                          ChartKind::RewardSchedule}) {
            emit_chart(kind, input, dir / (std::string(to_string(kind)) + ".svg"));
        }
    }
}

void print_summary(const ScenarioResult& r, std::ostream& out) {
    out << "scenario: " << r.name << '\n'
        << "months: " << r.frames.size() << '\n'
        << "mean_staking_ratio: " << format_number(r.summary.mean_staking_ratio) << '\n'
        << "staking_ratio_volatility: " << format_number(r.summary.staking_ratio_volatility) << '\n'
        << "final_governor_count: " << r.summary.final_governor_count << '\n'
        << "final_supply: " << format_number(r.summary.final_supply) << '\n';
}

RunConfig load_for_run(const std::string& config_path, const GlobalFlags& globals) {
    RunConfig config = load_run_config(config_path);
    globals.apply(config);
    config.policy.validate();
    return config;
}

int cmd_run(const std::string& config_path, const GlobalFlags& globals, std::ostream& out) {
    const RunConfig config = load_for_run(config_path, globals);
    const auto profiles = sample_population(config.population);
    const auto shocks =
        generate_shocks(config.policy.horizon_months, config.policy.shock_std_dev, config.policy.shock_seed);
    const auto result = run_scenario(config.scenario_name, profiles, config.policy, shocks);
    write_scenario_outputs(result, config.output, config.output.directory);
    print_summary(result, out);
    return kExitOk;
}

int cmd_compare(const std::string& config_path, const std::string& preset_list, const GlobalFlags& globals,
                std::ostream& out) {
    const auto presets = split_list(preset_list, "--presets");
    if (presets.size() < 2) throw ConfigError("--presets: a comparison needs at least two presets");
    if (std::set<std::string>(presets.begin(), presets.end()).size() != presets.size()) {
        throw ConfigError("--presets: duplicate preset");
    }
    for (const auto& name : presets) apply_preset(name, PolicyConfig{});

    const RunConfig config = load_for_run(config_path, globals);
    const auto profiles = sample_population(config.population);
    const auto shocks =
        generate_shocks(config.policy.horizon_months, config.policy.shock_std_dev, config.policy.shock_seed);
    const auto results = run_comparative(presets, profiles, config.policy, shocks);

    const fs::path dir = config.output.directory;
    ensure_directory(dir);
    for (const auto& r : results) {
        write_scenario_outputs(r, config.output, dir / r.name);
        print_summary(r, out);
    }
    write_text_file(dir / "comparison.csv", comparison_summary_csv(results));
    out << "wrote " << (dir / "comparison.csv").string() << '\n';
    return kExitOk;
}

std::string joined_presets() {
    std::string all;
    for (auto name : preset_names()) {
        if (!all.empty()) all += ',';
        all += name;
    }
    return all;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Agent-based simulator of NNS staking rewards and governance participation", "nnssim"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalFlags globals;
    app.add_option("--output-dir", globals.output_dir, "Directory for generated files");
    app.add_option("--seed-population", globals.seed_population, "Override population.seed");
    app.add_option("--seed-shocks", globals.seed_shocks, "Override simulation.shock_seed");
    app.add_option("--format", globals.format, "Comma-separated subset of csv,json,svg");

    CalcArgs calc;
    auto* calc_cmd = app.add_subcommand("calc", "Evaluate a multiplier, voting power or estimated yield");
    calc_cmd->add_option("kind", calc.kind, "dissolve | age | voting-power | estimated-ratio")
        ->required()
        ->check(CLI::IsMember({"dissolve", "age", "voting-power", "estimated-ratio"}));
    calc_cmd->add_option("--delay", calc.delay, "Dissolve delay in months");
    calc_cmd->add_option("--age", calc.age, "Neuron age in months");
    calc_cmd->add_option("--stake", calc.stake, "Staked tokens");
    calc_cmd->add_option("--pool", calc.pool, "Monthly reward pool");
    calc_cmd->add_option("--aggregate", calc.aggregate, "Sum of stake * age mult * delay mult over governors");
    calc_cmd->add_option("--dissolve-curve", calc.dissolve_curve, "full | fixed")
        ->check(CLI::IsMember({"full", "fixed"}));
    calc_cmd->add_option("--age-curve", calc.age_curve, "full | disabled")
        ->check(CLI::IsMember({"full", "disabled"}));

    ScheduleArgs schedule;
    auto* schedule_cmd = app.add_subcommand("schedule", "Print the yearly inflation and supply table");
    schedule_cmd->add_option("--initial-supply", schedule.initial_supply, "Genesis supply")
        ->check(CLI::PositiveNumber);
    schedule_cmd->add_option("--years", schedule.years, "Number of years")->check(CLI::Range(1, 10000));
    schedule_cmd->add_option("--policy", schedule.policy, "dynamic | constant")
        ->check(CLI::IsMember({"dynamic", "constant"}));
    schedule_cmd->add_option("--csv", schedule.csv, "Also write the table to this file");

    std::optional<std::string> sample_config;
    auto* sample_cmd = app.add_subcommand("sample", "Sample the agent population and write histograms");
    sample_cmd->add_option("config", sample_config, "Run configuration JSON");

    std::string run_config;
    auto* run_cmd = app.add_subcommand("run", "Run one scenario");
    run_cmd->add_option("config", run_config, "Run configuration JSON")->required();

    std::string compare_config;
    std::string presets = joined_presets();
    auto* compare_cmd = app.add_subcommand("compare", "Run several presets on a shared population and shocks");
    compare_cmd->add_option("config", compare_config, "Run configuration JSON")->required();
    compare_cmd->add_option("--presets", presets, "Comma-separated preset names")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    try {
        if (calc_cmd->parsed()) return cmd_calc(calc, out);
        if (schedule_cmd->parsed()) return cmd_schedule(schedule, out);
        if (sample_cmd->parsed()) return cmd_sample(sample_config, globals, out);
        if (run_cmd->parsed()) return cmd_run(run_config, globals, out);
        if (compare_cmd->parsed()) return cmd_compare(compare_config, presets, globals, out);
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitUsage;
}

}  // namespace nnssim::cli
