#pragma once

// Scenario configuration: flat key=value files plus CLI-flag overrides.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace modbound {

enum class ScenarioKind {
    linear_birefringence,
    zener,
    custom_tabulated,
};

struct ScenarioConfig {
    ScenarioKind scenario = ScenarioKind::linear_birefringence;

    // scenario parameters
    double k1 = 1.0;
    double s0 = 0.0;
    double s1 = 2.0;
    double eps = 0.0;
    double gamma = 1.0;
    double lambda = 1.0;
    std::optional<std::vector<double>> lambda_grid;
    std::string base_table;
    std::string pert_table;

    // numerics (0 = use the documented default)
    std::size_t steps = 0;
    double fd_h = 0.0;
    std::size_t quad_panels = 64;
    std::size_t expansion_grid = 128;
    std::size_t trajectory_samples = 400;

    // output
    std::string out_path;
    std::string format_version = "1";
};

// Documented numeric defaults, printed by --show-defaults.
struct Defaults {
    static constexpr double fd_h_eps = 1e-4;
    static constexpr double fd_h_lambda = 5e-4;
    static constexpr std::size_t quad_panels = 64;
    static constexpr std::size_t expansion_grid = 128;
    static constexpr std::size_t trajectory_samples = 400;
    static constexpr double sweep_lambda_min = 0.0;
    static constexpr double sweep_lambda_max = 5.0;
    static constexpr std::size_t sweep_points = 501;
};
std::string defaults_table();

// Parses `key = value` lines ('#' comments, blank lines allowed). Unknown
// keys, malformed numbers and non-finite values are rejected.
ScenarioConfig parse_config_text(const std::string& text);
ScenarioConfig parse_config_file(const std::string& path);

// Applies a single key=value override (the CLI funnels flags through this).
void apply_config_entry(ScenarioConfig& cfg, const std::string& key,
                        const std::string& value);

// "a:b:n" -> n uniformly spaced values from a to b (n >= 2, b > a),
// or a single value when n == 1 (then b must equal a).
std::vector<double> parse_grid_spec(const std::string& spec);

// MODBOUND_WORKERS (positive integer); absent -> 1 (sequential).
std::size_t workers_from_env();

}  // namespace modbound
