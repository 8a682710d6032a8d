#include "modbound/responsivity.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "modbound/bounds.hpp"

namespace modbound {

ModulatorSetup::ModulatorSetup(PerturbedHamiltonian h, Ket in, Ket pol)
    : hamiltonian(std::move(h)), psi_i(in), psi_p(pol) {
    if (std::abs(psi_i.norm() - 1.0) > 1e-12 || std::abs(psi_p.norm() - 1.0) > 1e-12) {
        throw InvalidInput("ModulatorSetup: psi_i and psi_p must be normalized");
    }
}

double transmission(const ModulatorSetup& setup, double eps, std::size_t steps) {
    const Ket psi_f = propagate_state(setup.hamiltonian.combined(eps), setup.psi_i, steps);
    const double t = std::norm(inner(setup.psi_p, psi_f));
    return std::clamp(t, 0.0, 1.0);
}

FdResult responsivity_fd(const ModulatorSetup& setup, double eps0, double h_eps,
                         std::size_t steps, FdMode mode) {
    return fd_derivative([&](double e) { return transmission(setup, e, steps); }, eps0,
                         h_eps, mode);
}

DeltaRho delta_rho(const ModulatorSetup& setup, double eps, std::size_t steps) {
    if (eps == 0.0) {
        return {Mat2::zero(), true};
    }
    const Ket f_eps = propagate_state(setup.hamiltonian.combined(eps), setup.psi_i, steps);
    const Ket f_0 = propagate_state(setup.hamiltonian.combined(0.0), setup.psi_i, steps);
    const Mat2 d = outer(f_eps, f_eps) - outer(f_0, f_0);
    return {checked_hermitian(d, 1e-10), false};
}

std::pair<double, double> traceless_eigenvalues(const Mat2& m) {
    // m = d . sigma for a real 3-vector d; eigenvalues are +/- |d|.
    const Vec3 d{m.m01.real(), -m.m01.imag(), m.m00.real()};
    const double mag = d.norm();
    return {mag, -mag};
}

OptimalPolarizer optimal_polarizer(const PerturbedHamiltonian& hamiltonian,
                                   const Ket& psi_i, double eps, std::size_t steps) {
    if (eps == 0.0) {
        throw DegenerateRequest("optimal_polarizer: undefined at eps = 0");
    }
    ModulatorSetup setup(hamiltonian, psi_i, Ket{{1, 0}, {0, 0}});
    const DeltaRho dr = delta_rho(setup, eps, steps);
    const Vec3 d{dr.matrix.m01.real(), -dr.matrix.m01.imag(), dr.matrix.m00.real()};
    const double mag = d.norm();
    if (mag < 1e-14) {
        throw DegenerateRequest("optimal_polarizer: delta_rho vanishes (zero perturbation)");
    }
    // Eigenvalues tie in absolute value; take the positive-eigenvalue eigenket.
    const Ket pol = eigenket((1.0 / mag) * d, +1);
    const Complex expectation = inner(pol, dr.matrix.apply(pol));
    return {pol, std::abs(expectation) / std::abs(eps)};
}

ExpansionCheck infidelity_expansion_check(const PerturbedHamiltonian& hamiltonian,
                                          const Ket& psi_i, double eps,
                                          std::size_t steps, std::size_t grid) {
    if (grid < 8) {
        throw InvalidInput("infidelity_expansion_check: grid must be >= 8 points per axis");
    }
    if (std::abs(psi_i.norm() - 1.0) > 1e-12) {
        throw InvalidInput("infidelity_expansion_check: psi_i must be normalized");
    }
    const HamiltonianProfile base = hamiltonian.combined(0.0);
    const HamiltonianProfile& pert = hamiltonian.perturbation;

    const Ket f_eps = propagate_state(hamiltonian.combined(eps), psi_i, steps);
    const Ket f_0 = propagate_state(base, psi_i, steps);
    const double lhs = 1.0 - std::norm(inner(f_0, f_eps));

    // Tensor trapezoid grid. For inverse-sqrt endpoint profiles the grid is
    // uniform in theta with s = c + r sin(theta), which bounds the integrand.
    const double s0 = base.s0();
    const double s1 = base.s1();
    const bool substituted = pert.endpoints() == EndpointBehavior::inverse_sqrt;
    std::vector<double> nodes(grid), weights(grid);
    if (substituted) {
        const double c = 0.5 * (s0 + s1);
        const double r = 0.5 * (s1 - s0);
        const double dth = M_PI / static_cast<double>(grid - 1);
        for (std::size_t j = 0; j < grid; ++j) {
            const double th = -0.5 * M_PI + static_cast<double>(j) * dth;
            nodes[j] = c + r * std::sin(th);
            const double trap = (j == 0 || j + 1 == grid) ? 0.5 : 1.0;
            weights[j] = trap * dth * r * std::cos(th);
        }
        // endpoint nodes coincide with s0/s1; their weights vanish analytically
        // (cos(+-pi/2) = 0), so the singular ends are never evaluated
        nodes.front() = s0;
        nodes.back() = s1;
        weights.front() = 0.0;
        weights.back() = 0.0;
    } else {
        const double h = (s1 - s0) / static_cast<double>(grid - 1);
        for (std::size_t j = 0; j < grid; ++j) {
            nodes[j] = (j + 1 == grid) ? s1 : s0 + static_cast<double>(j) * h;
            weights[j] = ((j == 0 || j + 1 == grid) ? 0.5 : 1.0) * h;
        }
    }

    const std::vector<Mat2> u0 = propagator_samples(base, nodes, steps);

    std::vector<Ket> v(grid);
    std::vector<double> e(grid);
    for (std::size_t j = 0; j < grid; ++j) {
        KappaSample ks{};
        if (weights[j] != 0.0) {
            ks = pert(nodes[j]);
        }
        const Mat2 k1 = generator(ks.kappa, ks.k0);
        const Mat2 k1h = u0[j].adjoint() * k1 * u0[j];
        v[j] = k1h.apply(psi_i);
        e[j] = inner(psi_i, v[j]).real();
    }

    double integral = 0.0;
    for (std::size_t a = 0; a < grid; ++a) {
        if (weights[a] == 0.0) continue;
        for (std::size_t b = 0; b < grid; ++b) {
            if (weights[b] == 0.0) continue;
            const double g = inner(v[a], v[b]).real() - e[a] * e[b];
            integral += weights[a] * weights[b] * g;
        }
    }
    return {lhs, eps * eps * integral};
}

double bloch_angle(const PerturbedHamiltonian& hamiltonian, const Ket& psi_i,
                   double eps, std::size_t steps) {
    const Ket f_eps = propagate_state(hamiltonian.combined(eps), psi_i, steps);
    const Ket f_0 = propagate_state(hamiltonian.combined(0.0), psi_i, steps);
    const Vec3 a = bloch_vector(f_eps);
    const Vec3 b = bloch_vector(f_0);
    // atan2 form stays accurate near 0 and pi where acos loses digits
    return std::atan2(cross(a, b).norm(), dot(a, b));
}

ResponsivityReport make_report(const ModulatorSetup& setup, double eps,
                               std::size_t steps, double fd_h, std::size_t quad_panels) {
    std::size_t n = steps;
    if (n == 0) {
        n = default_step_count(setup.hamiltonian.combined(eps));
    }
    ResponsivityReport rep;
    rep.eps_used = eps;
    rep.T0 = transmission(setup, 0.0, n);
    rep.T_eps = transmission(setup, eps, n);
    const FdResult fd = responsivity_fd(setup, eps, fd_h, n);
    rep.dT_deps = fd.value;

    // Schwartz bound for the derivative at eps: re-center the base there.
    const HamiltonianProfile recentered = setup.hamiltonian.combined(eps);
    rep.bound_schwartz =
        schwartz_bound(recentered, setup.hamiltonian.perturbation, setup.psi_i,
                       quad_panels, n)
            .value;
    rep.bound_pauli = pauli_arc_bound(setup.hamiltonian.perturbation, quad_panels).value;
    rep.saturation_ratio = rep.bound_pauli > 0.0 ? std::abs(rep.dT_deps) / rep.bound_pauli : 0.0;
    return rep;
}

}  // namespace modbound
