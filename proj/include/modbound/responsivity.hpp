#pragma once

// Transmission, responsivity estimates, optimal-polarizer construction from
// the density-operator difference, and numerical verification of the
// second-order perturbation expansion.

#include <cstddef>
#include <functional>

#include "modbound/evolution.hpp"
#include "modbound/numerics.hpp"
#include "modbound/pauli.hpp"
#include "modbound/profile.hpp"

namespace modbound {

// Input state, polarizer state and the perturbed Hamiltonian they sandwich.
struct ModulatorSetup {
    PerturbedHamiltonian hamiltonian;
    Ket psi_i;
    Ket psi_p;

    ModulatorSetup(PerturbedHamiltonian h, Ket in, Ket pol);
};

struct ResponsivityReport {
    double T0 = 0.0;
    double T_eps = 0.0;
    double dT_deps = 0.0;
    double eps_used = 0.0;
    double bound_schwartz = 0.0;
    double bound_pauli = 0.0;
    double saturation_ratio = 0.0;
};

// T(eps) = |<psi_p|psi_f(eps)>|^2, in [0, 1].
double transmission(const ModulatorSetup& setup, double eps, std::size_t steps);

// Derivative of transmission with respect to eps at eps0.
FdResult responsivity_fd(const ModulatorSetup& setup, double eps0, double h_eps,
                         std::size_t steps, FdMode mode = FdMode::central);

// rho(eps) - rho(0). Degenerate (zero) at eps = 0.
struct DeltaRho {
    Mat2 matrix = Mat2::zero();
    bool degenerate = false;
};
DeltaRho delta_rho(const ModulatorSetup& setup, double eps, std::size_t steps);

// Eigenvalues of a traceless Hermitian 2x2 matrix, returned as {+m, -m}.
std::pair<double, double> traceless_eigenvalues(const Mat2& m);

// Polarizer choice maximizing |dT/deps|: the positive-eigenvalue eigenket of
// delta_rho, with the achieved |<psi_p|delta_rho|psi_p>| / |eps|.
struct OptimalPolarizer {
    Ket psi_p{};
    double achieved = 0.0;
};
OptimalPolarizer optimal_polarizer(const PerturbedHamiltonian& hamiltonian,
                                   const Ket& psi_i, double eps, std::size_t steps);

// Both sides of the second-order infidelity identity:
//   lhs = 1 - |<psi_i|U^dag(0)U(eps)|psi_i>|^2  (direct propagation)
//   rhs = eps^2 * double integral of <DeltaK1H(s') DeltaK1H(s'')>
// The double integral uses a tensor trapezoid grid (`grid` >= 8 points per
// axis); profiles flagged inverse_sqrt are integrated in the substituted
// variable so the grid sees a bounded integrand.
struct ExpansionCheck {
    double lhs = 0.0;
    double rhs = 0.0;
};
ExpansionCheck infidelity_expansion_check(const PerturbedHamiltonian& hamiltonian,
                                          const Ket& psi_i, double eps,
                                          std::size_t steps, std::size_t grid);

// Angle in [0, pi] between the Bloch vectors of psi_f(eps) and psi_f(0).
double bloch_angle(const PerturbedHamiltonian& hamiltonian, const Ket& psi_i,
                   double eps, std::size_t steps);

// Assembles the full report at eps: transmission at 0 and eps, the central
// finite-difference responsivity at eps, and both bounds (the Schwartz bound
// re-centered at eps). `steps` = 0 selects the default step rule.
ResponsivityReport make_report(const ModulatorSetup& setup, double eps,
                               std::size_t steps, double fd_h, std::size_t quad_panels);

}  // namespace modbound
