#include "modbound/scenarios.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <string>
#include <thread>

#include "modbound/bounds.hpp"
#include "modbound/numerics.hpp"

namespace modbound {

ModulatorSetup LinearBirefringenceScenario::setup() const {
    PerturbedHamiltonian h(HamiltonianProfile::zero(s0, s1), perturbation_profile(), 0.0);
    return ModulatorSetup(std::move(h), eigenket({0, 1, 0}, +1), eigenket({0, 0, 1}, +1));
}

HamiltonianProfile LinearBirefringenceScenario::perturbation_profile() const {
    const double half_k1 = 0.5 * k1;
    return HamiltonianProfile(
        s0, s1, [half_k1](double) { return KappaSample{0.0, {half_k1, 0.0, 0.0}}; });
}

double linear_transmission_closed_form(double k1, double s1, double eps) {
    const double arg = 0.5 * eps * k1 * s1 - 0.25 * M_PI;
    const double s = std::sin(arg);
    return s * s;
}

FullModulationPath full_modulation_path(double k1, double eps) {
    if (!(eps * k1 > 0.0)) {
        throw InvalidInput("full_modulation_path: eps * k1 must be positive");
    }
    const double half = 0.5 * M_PI / (eps * k1);
    LinearBirefringenceScenario scen{k1, -half, half};
    PerturbedHamiltonian h(HamiltonianProfile::zero(-half, half),
                           scen.perturbation_profile(), eps);
    // |+;y> given at the path midpoint s = 0 corresponds exactly to |+;z>
    // at s0 = -pi/(2 eps k1): the backward quarter-turn about x undoes it.
    ModulatorSetup setup(std::move(h), eigenket({0, 0, 1}, +1), eigenket({0, 0, 1}, +1));
    return {std::move(setup), 0.5 * eps * k1, 2.0 * half};
}

HamiltonianProfile ZenerScenario::profile() const {
    if (!(lambda > 0.0) || !(gamma > 0.0)) {
        throw InvalidInput("ZenerScenario: requires lambda > 0 and gamma > 0");
    }
    const double g = gamma;
    const double lam = lambda;
    return HamiltonianProfile(
        -lam / g, lam / g,
        [g, lam](double s) {
            const double gs = g * s;
            const double radicand = std::max(lam * lam - gs * gs, 0.0);
            return KappaSample{0.0, {0.0, g * std::sqrt(radicand), g * gs}};
        },
        /*piecewise_smooth=*/false);
}

HamiltonianProfile ZenerScenario::lambda_derivative_profile() const {
    if (!(lambda > 0.0) || !(gamma > 0.0)) {
        throw InvalidInput("ZenerScenario: requires lambda > 0 and gamma > 0");
    }
    const double g = gamma;
    const double lam = lambda;
    return HamiltonianProfile(
        -lam / g, lam / g,
        [g, lam](double s) {
            const double gs = g * s;
            const double radicand = std::max(lam * lam - gs * gs, 0.0);
            return KappaSample{0.0, {0.0, g * lam / std::sqrt(radicand), 0.0}};
        },
        /*piecewise_smooth=*/false, EndpointBehavior::inverse_sqrt);
}

Ket ZenerScenario::psi_i() const { return eigenket({0, 0, 1}, -1); }
Ket ZenerScenario::psi_p() const { return eigenket({0, 0, 1}, -1); }

std::size_t ZenerScenario::default_steps() const {
    // |kappa| = gamma*lambda over length 2*lambda/gamma: arc = 2*lambda^2.
    const double wanted = 2e4 * 2.0 * lambda * lambda;
    return std::max<std::size_t>(1000, static_cast<std::size_t>(std::llround(
                                           std::min(wanted, 4e6))));
}

double ZenerScenario::transmission(std::size_t steps) const {
    if (lambda == 0.0) {
        return 1.0;  // zero-length path: U = I
    }
    if (steps == 0) {
        steps = default_steps();
    }
    const Ket f = propagate_state(profile(), psi_i(), steps);
    return std::clamp(std::norm(inner(psi_p(), f)), 0.0, 1.0);
}

double bessel_j0(double x) {
    const double ax = std::abs(x);
    if (!(ax <= 1e4)) {
        throw InvalidInput("bessel_j0: |x| must be <= 1e4");
    }
    if (ax <= 12.0) {
        // Power series sum (-1)^m (x/2)^(2m) / (m!)^2.
        const double q = 0.25 * ax * ax;
        double term = 1.0;
        double sum = 1.0;
        for (int m = 1; m <= 80; ++m) {
            term *= -q / (static_cast<double>(m) * static_cast<double>(m));
            sum += term;
            if (std::abs(term) < 1e-18 * std::max(1.0, std::abs(sum))) {
                break;
            }
        }
        return sum;
    }
    // Hankel asymptotic expansion, truncated at the smallest term:
    // J0 = sqrt(2/(pi x)) [P cos(x - pi/4) - Q sin(x - pi/4)].
    double t = 1.0;
    double p = 1.0;
    double qq = 0.0;
    double sign_p = -1.0;
    double sign_q = -1.0;
    double prev = 1.0;
    for (int m = 1; m <= 40; ++m) {
        const double f = (2.0 * m - 1.0);
        t *= f * f / (8.0 * static_cast<double>(m) * ax);
        if (std::abs(t) >= prev) {
            break;  // asymptotic divergence onset
        }
        prev = std::abs(t);
        if (m % 2 == 1) {
            qq += sign_q * t;
            sign_q = -sign_q;
        } else {
            p += sign_p * t;
            sign_p = -sign_p;
        }
        if (std::abs(t) < 1e-17) {
            break;
        }
    }
    const double chi = ax - 0.25 * M_PI;
    return std::sqrt(2.0 / (M_PI * ax)) * (p * std::cos(chi) - qq * std::sin(chi));
}

double zener_T_approx(double lambda) {
    if (!(lambda >= 0.0)) {
        throw InvalidInput("zener_T_approx: lambda must be non-negative");
    }
    const double j = bessel_j0(2.0 * lambda * lambda);
    return 0.25 * M_PI * M_PI * j * j;
}

namespace {

double sweep_transmission(double gamma, double lam, std::size_t steps) {
    if (lam <= 0.0) {
        return 1.0;
    }
    ZenerScenario sc{gamma, lam};
    return sc.transmission(steps);
}

SweepRecord sweep_point(double gamma, double lam, std::size_t steps, double fd_h) {
    SweepRecord rec;
    rec.lambda = lam;
    rec.T = sweep_transmission(gamma, lam, steps);
    if (lam >= fd_h) {
        const double tp = sweep_transmission(gamma, lam + fd_h, steps);
        const double tm = sweep_transmission(gamma, lam - fd_h, steps);
        rec.dT_dlambda = (tp - tm) / (2.0 * fd_h);
    } else {
        const double tp = sweep_transmission(gamma, lam + fd_h, steps);
        rec.dT_dlambda = (tp - rec.T) / fd_h;
    }
    rec.bound_pi_lambda = M_PI * lam;
    rec.T_bessel_approx = zener_T_approx(lam);
    rec.saturation_ratio =
        lam > 0.0 ? std::abs(rec.dT_dlambda) / rec.bound_pi_lambda : 0.0;
    return rec;
}

}  // namespace

std::vector<SweepRecord> zener_sweep(double gamma, const std::vector<double>& lambda_grid,
                                     std::size_t steps, double fd_h,
                                     std::size_t workers) {
    if (lambda_grid.empty()) {
        throw InvalidInput("zener_sweep: empty lambda grid");
    }
    if (!(fd_h > 0.0)) {
        throw InvalidInput("zener_sweep: fd_h must be positive");
    }
    for (std::size_t i = 0; i < lambda_grid.size(); ++i) {
        if (!(lambda_grid[i] >= 0.0) ||
            (i > 0 && !(lambda_grid[i] > lambda_grid[i - 1]))) {
            throw InvalidInput("zener_sweep: grid must be strictly increasing and >= 0");
        }
    }
    std::vector<SweepRecord> records(lambda_grid.size());
    const std::size_t n_workers =
        std::max<std::size_t>(1, std::min(workers, lambda_grid.size()));
    if (n_workers == 1) {
        for (std::size_t i = 0; i < lambda_grid.size(); ++i) {
            records[i] = sweep_point(gamma, lambda_grid[i], steps, fd_h);
        }
        return records;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (std::size_t w = 0; w < n_workers; ++w) {
        pool.emplace_back([&]() {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= lambda_grid.size()) {
                    return;
                }
                records[i] = sweep_point(gamma, lambda_grid[i], steps, fd_h);
            }
        });
    }
    for (auto& th : pool) {
        th.join();
    }
    return records;
}

ResponsivityReport zener_report(double gamma, double lambda, std::size_t steps,
                                double fd_h, std::size_t quad_panels) {
    if (!(lambda > 0.0)) {
        throw InvalidInput("zener_report: requires lambda > 0");
    }
    ResponsivityReport rep;
    rep.eps_used = lambda;
    rep.T0 = 1.0;  // zero-length path at lambda = 0
    ZenerScenario sc{gamma, lambda};
    rep.T_eps = sc.transmission(steps);
    const FdResult fd = fd_derivative(
        [&](double lam) { return sweep_transmission(gamma, lam, steps); }, lambda, fd_h);
    rep.dT_deps = fd.value;
    rep.bound_schwartz =
        schwartz_bound(sc.profile(), sc.lambda_derivative_profile(), sc.psi_i(),
                       quad_panels, steps)
            .value;
    rep.bound_pauli = pauli_arc_bound(sc.lambda_derivative_profile(), quad_panels).value;
    rep.saturation_ratio =
        rep.bound_pauli > 0.0 ? std::abs(rep.dT_deps) / rep.bound_pauli : 0.0;
    return rep;
}

HamiltonianProfile tabulated_profile(std::vector<double> s,
                                     std::vector<KappaSample> samples) {
    if (s.size() != samples.size() || s.size() < 2) {
        throw InvalidInput("tabulated_profile: need >= 2 rows with matching lengths");
    }
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!(s[i] > s[i - 1])) {
            throw InvalidInput("tabulated_profile: s column must be strictly increasing");
        }
    }
    const double s0 = s.front();
    const double s1 = s.back();
    auto eval = [s = std::move(s), samples = std::move(samples)](double x) {
        auto it = std::upper_bound(s.begin(), s.end(), x);
        std::size_t hi = static_cast<std::size_t>(it - s.begin());
        hi = std::clamp<std::size_t>(hi, 1, s.size() - 1);
        const std::size_t lo = hi - 1;
        const double t = (x - s[lo]) / (s[hi] - s[lo]);
        const double u = std::clamp(t, 0.0, 1.0);
        const KappaSample& a = samples[lo];
        const KappaSample& b = samples[hi];
        return KappaSample{a.k0 + u * (b.k0 - a.k0), a.kappa + u * (b.kappa - a.kappa)};
    };
    return HamiltonianProfile(s0, s1, std::move(eval));
}

}  // namespace modbound
