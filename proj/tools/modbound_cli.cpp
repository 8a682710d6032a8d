// modbound: simulate two-mode optical modulators, sweep the Zener scenario,
// report responsivity against the analytic bounds, and verify the
// perturbation expansion. Subcommands: simulate | sweep | respond | verify.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "modbound/bounds.hpp"
#include "modbound/config.hpp"
#include "modbound/csv.hpp"
#include "modbound/errors.hpp"
#include "modbound/evolution.hpp"
#include "modbound/responsivity.hpp"
#include "modbound/scenarios.hpp"

namespace {

using namespace modbound;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerics = 3;
constexpr int kExitDegenerate = 4;
constexpr int kExitVerification = 5;

HamiltonianProfile load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw InvalidInput("cannot open table '" + path + "'");
    }
    std::vector<double> s;
    std::vector<KappaSample> rows;
    std::string line;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) {
            line = line.substr(0, hash);
        }
        std::istringstream ls(line);
        double sv, k0, kx, ky, kz;
        if (ls >> sv >> k0 >> kx >> ky >> kz) {
            s.push_back(sv);
            rows.push_back({k0, {kx, ky, kz}});
        }
    }
    return tabulated_profile(std::move(s), std::move(rows));
}

// The eps-knob setup for the linear and custom scenarios.
ModulatorSetup build_eps_setup(const ScenarioConfig& cfg) {
    if (cfg.scenario == ScenarioKind::linear_birefringence) {
        LinearBirefringenceScenario scen{cfg.k1, cfg.s0, cfg.s1};
        return scen.setup();
    }
    if (cfg.scenario == ScenarioKind::custom_tabulated) {
        if (cfg.base_table.empty()) {
            throw InvalidInput("custom_tabulated scenario requires base_table");
        }
        HamiltonianProfile base = load_table(cfg.base_table);
        HamiltonianProfile pert =
            cfg.pert_table.empty()
                ? HamiltonianProfile::zero(base.s0(), base.s1())
                : load_table(cfg.pert_table);
        PerturbedHamiltonian h(std::move(base), std::move(pert), cfg.eps);
        return ModulatorSetup(std::move(h), eigenket({0, 1, 0}, +1),
                              eigenket({0, 0, 1}, +1));
    }
    throw InvalidInput("this command expects an eps-knob scenario (linear or custom)");
}

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw InvalidInput("cannot open output file '" + path + "'");
    }
    return out;
}

int cmd_simulate(const ScenarioConfig& cfg) {
    const std::string out_path = cfg.out_path.empty() ? "trajectory.csv" : cfg.out_path;
    const std::size_t samples =
        cfg.trajectory_samples > 0 ? cfg.trajectory_samples : Defaults::trajectory_samples;
    if (cfg.scenario == ScenarioKind::zener) {
        ZenerScenario sc{cfg.gamma, cfg.lambda};
        const HamiltonianProfile profile = sc.profile();
        const std::size_t steps = cfg.steps > 0 ? cfg.steps : sc.default_steps();
        const PropagationResult res = propagate(profile, sc.psi_i(), steps, samples);
        auto out = open_out(out_path);
        write_trajectory_csv(out, profile, *res.trajectory);
        const double t = std::norm(inner(sc.psi_p(), res.psi_f));
        std::cout << "T=" << format_double(std::clamp(t, 0.0, 1.0)) << "\n";
        return kExitOk;
    }
    const ModulatorSetup setup = build_eps_setup(cfg);
    const HamiltonianProfile profile = setup.hamiltonian.combined(cfg.eps);
    const std::size_t steps = cfg.steps > 0 ? cfg.steps : default_step_count(profile);
    const PropagationResult res = propagate(profile, setup.psi_i, steps, samples);
    auto out = open_out(out_path);
    write_trajectory_csv(out, profile, *res.trajectory);
    const double t = std::norm(inner(setup.psi_p, res.psi_f));
    std::cout << "T=" << format_double(std::clamp(t, 0.0, 1.0)) << "\n";
    return kExitOk;
}

int cmd_sweep(const ScenarioConfig& cfg) {
    if (cfg.scenario != ScenarioKind::zener) {
        throw InvalidInput("sweep requires scenario = zener");
    }
    std::vector<double> grid;
    if (cfg.lambda_grid) {
        grid = *cfg.lambda_grid;
    } else {
        std::ostringstream spec;
        spec << Defaults::sweep_lambda_min << ":" << Defaults::sweep_lambda_max << ":"
             << Defaults::sweep_points;
        grid = parse_grid_spec(spec.str());
    }
    const double fd_h = cfg.fd_h > 0.0 ? cfg.fd_h : Defaults::fd_h_lambda;
    const std::size_t workers = workers_from_env();
    const std::vector<SweepRecord> records =
        zener_sweep(cfg.gamma, grid, cfg.steps, fd_h, workers);
    const std::string out_path = cfg.out_path.empty() ? "sweep.csv" : cfg.out_path;
    auto out = open_out(out_path);
    write_sweep_csv(out, records);
    return kExitOk;
}

int cmd_respond(const ScenarioConfig& cfg, bool optimal_flag) {
    ResponsivityReport rep;
    std::optional<OptimalPolarizer> opt;
    if (cfg.scenario == ScenarioKind::zener) {
        const double fd_h = cfg.fd_h > 0.0 ? cfg.fd_h : Defaults::fd_h_lambda;
        rep = zener_report(cfg.gamma, cfg.lambda, cfg.steps, fd_h, cfg.quad_panels);
        if (optimal_flag) {
            // delta-rho between lambda and lambda 0 is not the lambda-knob
            // derivative object; the optimal polarizer is defined for the
            // eps-knob scenarios only.
            throw InvalidInput("--optimal-polarizer applies to eps-knob scenarios");
        }
    } else {
        const ModulatorSetup setup = build_eps_setup(cfg);
        const double fd_h = cfg.fd_h > 0.0 ? cfg.fd_h : Defaults::fd_h_eps;
        rep = make_report(setup, cfg.eps, cfg.steps, fd_h, cfg.quad_panels);
        if (optimal_flag) {
            const std::size_t steps = cfg.steps > 0
                                          ? cfg.steps
                                          : default_step_count(
                                                setup.hamiltonian.combined(cfg.eps));
            opt = optimal_polarizer(setup.hamiltonian, setup.psi_i, cfg.eps, steps);
        }
    }
    const std::string out_path = cfg.out_path.empty() ? "report.csv" : cfg.out_path;
    auto out = open_out(out_path);
    write_report_csv(out, rep);
    std::cout << "dT_deps=" << format_double(rep.dT_deps)
              << " bound_schwartz=" << format_double(rep.bound_schwartz)
              << " bound_pauli=" << format_double(rep.bound_pauli)
              << " ratio=" << format_double(rep.saturation_ratio) << "\n";
    if (opt) {
        std::cout << "optimal_polarizer=(" << format_double(opt->psi_p.a0.real()) << "+"
                  << format_double(opt->psi_p.a0.imag()) << "i,"
                  << format_double(opt->psi_p.a1.real()) << "+"
                  << format_double(opt->psi_p.a1.imag()) << "i)"
                  << " achieved=" << format_double(opt->achieved) << "\n";
    }
    return kExitOk;
}

struct VerifyCheck {
    std::string name;
    bool passed;
    std::string detail;
};

int cmd_verify(const ScenarioConfig& cfg) {
    std::vector<VerifyCheck> checks;
    const double eps = cfg.eps != 0.0 ? cfg.eps : 0.01;
    const std::size_t grid = cfg.expansion_grid > 0 ? cfg.expansion_grid : Defaults::expansion_grid;

    PerturbedHamiltonian h = [&]() {
        if (cfg.scenario == ScenarioKind::zener) {
            ZenerScenario sc{cfg.gamma, cfg.lambda};
            return PerturbedHamiltonian(sc.profile(), sc.lambda_derivative_profile(), 0.0);
        }
        return build_eps_setup(cfg).hamiltonian;
    }();
    const Ket psi_i = cfg.scenario == ScenarioKind::zener
                          ? ZenerScenario{cfg.gamma, cfg.lambda}.psi_i()
                          : build_eps_setup(cfg).psi_i;

    const std::size_t steps =
        cfg.steps > 0 ? cfg.steps : default_step_count(h.combined(0.0));

    const ExpansionCheck ex = infidelity_expansion_check(h, psi_i, eps, steps, grid);
    const double ratio = ex.rhs != 0.0 ? ex.lhs / ex.rhs : (ex.lhs == 0.0 ? 1.0 : 0.0);
    checks.push_back({"expansion_lhs_rhs",
                      ratio >= 0.98 && ratio <= 1.02,
                      "lhs=" + format_double(ex.lhs) + " rhs=" + format_double(ex.rhs) +
                          " ratio=" + format_double(ratio)});

    const BoundReport sw = schwartz_bound(h.combined(0.0), h.perturbation, psi_i,
                                          cfg.quad_panels, steps);
    const BoundReport pa = pauli_arc_bound(h.perturbation, cfg.quad_panels);
    const double qtol = sw.quadrature_error_estimate + pa.quadrature_error_estimate + 1e-9;
    checks.push_back({"schwartz_le_pauli",
                      sw.value <= pa.value + qtol,
                      "schwartz=" + format_double(sw.value) +
                          " pauli=" + format_double(pa.value)});

    const PropagationResult prop = propagate(h.combined(eps), psi_i, steps);
    const double ures = unitarity_residual(prop.propagator);
    checks.push_back({"unitarity_residual",
                      ures <= 1e-10,
                      "residual=" + format_double(ures)});
    const double ndrift = std::abs(prop.psi_f.norm() - 1.0);
    checks.push_back({"state_norm_drift", ndrift <= 1e-10,
                      "drift=" + format_double(ndrift)});

    bool all = true;
    for (const VerifyCheck& c : checks) {
        all = all && c.passed;
        std::cout << (c.passed ? "[ok]   " : "[FAIL] ") << c.name << "  " << c.detail
                  << "\n";
    }
    if (!all) {
        std::cerr << "verification failed:";
        for (const VerifyCheck& c : checks) {
            if (!c.passed) {
                std::cerr << " " << c.name;
            }
        }
        std::cerr << "\n";
        return kExitVerification;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-mode optical modulator simulator and bound-verification toolkit"};
    app.require_subcommand(0, 1);

    bool show_defaults = false;
    app.add_flag("--show-defaults", show_defaults, "print the numeric defaults table");

    std::string config_path, out_path, lambda_grid_spec, scenario_name;
    std::optional<std::size_t> steps;
    std::optional<double> fd_h, lambda, eps, k1, gamma, s0, s1;
    std::optional<std::size_t> quad_panels, expansion_grid, samples;
    bool optimal_flag = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", config_path, "key=value config file");
        sub->add_option("--out", out_path, "output CSV path");
        sub->add_option("--steps", steps, "integrator steps (0 = auto)");
        sub->add_option("--fd-h", fd_h, "finite-difference step");
        sub->add_option("--lambda", lambda, "Zener sweep parameter");
        sub->add_option("--lambda-grid", lambda_grid_spec, "a:b:n sweep grid");
        sub->add_option("--eps", eps, "perturbation strength");
        sub->add_option("--scenario", scenario_name,
                        "linear_birefringence | zener | custom_tabulated");
        sub->add_option("--k1", k1, "linear-birefringence strength");
        sub->add_option("--gamma", gamma, "Zener rate constant (1/length)");
        sub->add_option("--s0", s0, "path start");
        sub->add_option("--s1", s1, "path end");
        sub->add_option("--quad-panels", quad_panels, "Gauss-Legendre panels");
        sub->add_option("--expansion-grid", expansion_grid,
                        "points per axis for the expansion check");
        sub->add_option("--samples", samples, "trajectory samples");
    };

    CLI::App* simulate = app.add_subcommand("simulate", "write a trajectory CSV");
    CLI::App* sweep = app.add_subcommand("sweep", "write the lambda-sweep CSV");
    CLI::App* respond = app.add_subcommand("respond", "write a responsivity report CSV");
    CLI::App* verify = app.add_subcommand("verify", "run consistency checks");
    for (CLI::App* sub : {simulate, sweep, respond, verify}) {
        add_common(sub);
    }
    respond->add_flag("--optimal-polarizer", optimal_flag,
                      "also compute the optimal polarizer state");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    if (show_defaults) {
        std::cout << modbound::defaults_table();
        return kExitOk;
    }
    if (app.get_subcommands().empty()) {
        std::cout << app.help();
        return kExitOk;
    }

    try {
        ScenarioConfig cfg;
        if (!config_path.empty()) {
            cfg = parse_config_file(config_path);
        }
        if (!scenario_name.empty()) {
            apply_config_entry(cfg, "scenario", scenario_name);
        }
        if (!out_path.empty()) cfg.out_path = out_path;
        if (!lambda_grid_spec.empty()) cfg.lambda_grid = parse_grid_spec(lambda_grid_spec);
        if (steps) cfg.steps = *steps;
        if (fd_h) {
            cfg.fd_h = *fd_h;
            if (!(cfg.fd_h > 0.0)) throw InvalidInput("--fd-h must be positive");
        }
        if (lambda) cfg.lambda = *lambda;
        if (eps) cfg.eps = *eps;
        if (k1) cfg.k1 = *k1;
        if (gamma) cfg.gamma = *gamma;
        if (s0) cfg.s0 = *s0;
        if (s1) cfg.s1 = *s1;
        if (quad_panels) cfg.quad_panels = *quad_panels;
        if (expansion_grid) cfg.expansion_grid = *expansion_grid;
        if (samples) cfg.trajectory_samples = *samples;

        if (simulate->parsed()) return cmd_simulate(cfg);
        if (sweep->parsed()) return cmd_sweep(cfg);
        if (respond->parsed()) return cmd_respond(cfg, optimal_flag);
        if (verify->parsed()) return cmd_verify(cfg);
        return kExitOk;
    } catch (const modbound::DegenerateRequest& e) {
        std::cerr << "degenerate request: " << e.what() << "\n";
        return kExitDegenerate;
    } catch (const modbound::InvalidInput& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const modbound::EvaluationError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerics;
    } catch (const modbound::InternalConsistencyError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerics;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConfig;
    }
}
