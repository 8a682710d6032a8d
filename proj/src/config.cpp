#include "modbound/config.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "modbound/errors.hpp"

namespace modbound {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return {};
    }
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    double out = 0.0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last || !std::isfinite(out)) {
        throw InvalidInput("config: key '" + key + "' expects a finite number, got '" +
                           value + "'");
    }
    return out;
}

std::size_t parse_size(const std::string& key, const std::string& value) {
    std::size_t out = 0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last) {
        throw InvalidInput("config: key '" + key + "' expects a non-negative integer, got '" +
                           value + "'");
    }
    return out;
}

}  // namespace

std::vector<double> parse_grid_spec(const std::string& spec) {
    const auto c1 = spec.find(':');
    const auto c2 = spec.find(':', c1 == std::string::npos ? 0 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
        throw InvalidInput("grid spec must be 'a:b:n', got '" + spec + "'");
    }
    const double a = parse_double("grid", spec.substr(0, c1));
    const double b = parse_double("grid", spec.substr(c1 + 1, c2 - c1 - 1));
    const std::size_t n = parse_size("grid", spec.substr(c2 + 1));
    if (n == 0) {
        throw InvalidInput("grid spec: n must be >= 1");
    }
    if (n == 1) {
        if (a != b) {
            throw InvalidInput("grid spec: single-point grid requires a == b");
        }
        return {a};
    }
    if (!(b > a)) {
        throw InvalidInput("grid spec: requires b > a");
    }
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) {
        grid[i] = a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1);
    }
    grid.back() = b;
    return grid;
}

void apply_config_entry(ScenarioConfig& cfg, const std::string& key,
                        const std::string& value) {
    if (key == "scenario") {
        if (value == "linear_birefringence") {
            cfg.scenario = ScenarioKind::linear_birefringence;
        } else if (value == "zener") {
            cfg.scenario = ScenarioKind::zener;
        } else if (value == "custom_tabulated") {
            cfg.scenario = ScenarioKind::custom_tabulated;
        } else {
            throw InvalidInput("config: unknown scenario '" + value + "'");
        }
    } else if (key == "k1") {
        cfg.k1 = parse_double(key, value);
    } else if (key == "s0") {
        cfg.s0 = parse_double(key, value);
    } else if (key == "s1") {
        cfg.s1 = parse_double(key, value);
    } else if (key == "eps") {
        cfg.eps = parse_double(key, value);
    } else if (key == "gamma") {
        cfg.gamma = parse_double(key, value);
    } else if (key == "lambda") {
        cfg.lambda = parse_double(key, value);
    } else if (key == "lambda_grid") {
        cfg.lambda_grid = parse_grid_spec(value);
    } else if (key == "base_table") {
        cfg.base_table = value;
    } else if (key == "pert_table") {
        cfg.pert_table = value;
    } else if (key == "steps") {
        cfg.steps = parse_size(key, value);
    } else if (key == "fd_h") {
        cfg.fd_h = parse_double(key, value);
        if (!(cfg.fd_h > 0.0)) {
            throw InvalidInput("config: fd_h must be positive");
        }
    } else if (key == "quad_panels") {
        cfg.quad_panels = parse_size(key, value);
        if (cfg.quad_panels == 0) {
            throw InvalidInput("config: quad_panels must be >= 1");
        }
    } else if (key == "expansion_grid") {
        cfg.expansion_grid = parse_size(key, value);
    } else if (key == "trajectory_samples") {
        cfg.trajectory_samples = parse_size(key, value);
    } else if (key == "out") {
        cfg.out_path = value;
    } else if (key == "format_version") {
        if (value != "1") {
            throw InvalidInput("config: unsupported format_version '" + value + "'");
        }
        cfg.format_version = value;
    } else {
        throw InvalidInput("config: unknown key '" + key + "'");
    }
}

ScenarioConfig parse_config_text(const std::string& text) {
    ScenarioConfig cfg;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw InvalidInput("config line " + std::to_string(lineno) +
                               ": expected 'key = value'");
        }
        apply_config_entry(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
    return cfg;
}

ScenarioConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("config: cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::string defaults_table() {
    std::ostringstream out;
    out << "steps              auto: 2e4 x integral |kappa| ds, min 1000\n"
        << "fd_h (eps)         " << Defaults::fd_h_eps << "\n"
        << "fd_h (lambda)      " << Defaults::fd_h_lambda << "\n"
        << "quad_panels        " << Defaults::quad_panels << "\n"
        << "expansion_grid     " << Defaults::expansion_grid << "\n"
        << "trajectory_samples " << Defaults::trajectory_samples << "\n"
        << "sweep grid         " << Defaults::sweep_lambda_min << ":"
        << Defaults::sweep_lambda_max << ":" << Defaults::sweep_points << "\n"
        << "workers            MODBOUND_WORKERS, absent = 1 (sequential)\n";
    return out.str();
}

std::size_t workers_from_env() {
    const char* raw = std::getenv("MODBOUND_WORKERS");
    if (raw == nullptr) {
        return 1;
    }
    const std::string value(raw);
    std::size_t out = 0;
    const char* first = value.data();
    const char* last = value.data() + value.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc{} || ptr != last || out == 0) {
        throw InvalidInput("MODBOUND_WORKERS must be a positive integer, got '" + value +
                           "'");
    }
    return out;
}

}  // namespace modbound
