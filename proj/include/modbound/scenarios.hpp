#pragma once

// The two worked modulator examples as profile/setup factories, the Bessel
// adiabatic approximation for the Zener case, and the lambda-sweep driver.

#include <cstddef>
#include <vector>

#include "modbound/evolution.hpp"
#include "modbound/profile.hpp"
#include "modbound/responsivity.hpp"

namespace modbound {

// Constant linear birefringence: K0 = 0, kappa_1 = (k1/2, 0, 0) on [s0, s1],
// circular input |+;y>, linear polarizer |+;z>.
struct LinearBirefringenceScenario {
    double k1 = 1.0;
    double s0 = 0.0;
    double s1 = 2.0;

    ModulatorSetup setup() const;
    HamiltonianProfile perturbation_profile() const;
};

// Closed form for the scenario above with the input given at s = 0:
// T(eps) = sin^2(eps*k1*s1/2 - pi/4).
double linear_transmission_closed_form(double k1, double s1, double eps);

// The shortest path achieving full modulation at drive eps: domain
// [-pi/(2 eps k1), +pi/(2 eps k1)], so that the state sweeps the polarizer
// transmission monotonically from 1 down to 0. The input state is the s = 0
// circular state propagated back to s0, which is exactly |+;z>.
struct FullModulationPath {
    ModulatorSetup setup;
    double kappa_max;
    double delta_s;
};
FullModulationPath full_modulation_path(double k1, double eps);

// Half-circle generator sweep between adiabatic and non-adiabatic regimes:
// kappa(s) = gamma*(0, sqrt(lambda^2 - (gamma s)^2), gamma s) on
// [-lambda/gamma, lambda/gamma], input and polarizer both |-;z>.
struct ZenerScenario {
    double gamma = 1.0;
    double lambda = 1.0;

    // Full generator profile at this lambda (requires lambda > 0).
    HamiltonianProfile profile() const;
    // d kappa / d lambda at fixed s: gamma*(0, lambda/sqrt(lambda^2-(gamma s)^2), 0),
    // flagged inverse_sqrt for quadrature.
    HamiltonianProfile lambda_derivative_profile() const;
    Ket psi_i() const;
    Ket psi_p() const;

    // |<psi_p|psi_f>|^2; lambda = 0 is the zero-length path, T = 1.
    // steps = 0 selects the default rule (2e4 steps per unit arc = 4e4*lambda^2).
    double transmission(std::size_t steps = 0) const;

    std::size_t default_steps() const;
};

// Power-series (|x| <= 12) / Hankel-asymptotic (12 < |x| <= 1e4) evaluation
// of the Bessel function J0.
double bessel_j0(double x);

// Lowest-order Zener transition probability (pi^2/4) J0(2 lambda^2)^2,
// claimed accurate for lambda >~ 1.
double zener_T_approx(double lambda);

// One row of the lambda sweep.
struct SweepRecord {
    double lambda = 0.0;
    double T = 0.0;
    double dT_dlambda = 0.0;
    double bound_pi_lambda = 0.0;
    double T_bessel_approx = 0.0;
    double saturation_ratio = 0.0;
};

// Sweep over an increasing lambda grid. dT/dlambda is the central difference
// of the whole-scenario transmission (domain endpoints move with lambda);
// grid points with lambda < fd_h use the forward difference. steps = 0 selects
// the per-lambda default rule. `workers` > 1 evaluates points concurrently;
// records always come back in grid order with values independent of the
// worker count.
std::vector<SweepRecord> zener_sweep(double gamma, const std::vector<double>& lambda_grid,
                                     std::size_t steps, double fd_h,
                                     std::size_t workers = 1);

// Responsivity report for the Zener scenario with lambda as the knob:
// T0 is the zero-length (lambda = 0) transmission, bounds evaluate the
// lambda-derivative generator.
ResponsivityReport zener_report(double gamma, double lambda, std::size_t steps,
                                double fd_h, std::size_t quad_panels);

// Piecewise-linear profile through tabulated rows (s, k0, kx, ky, kz).
// Rows must be strictly increasing in s with at least two rows.
HamiltonianProfile tabulated_profile(std::vector<double> s,
                                     std::vector<KappaSample> samples);

}  // namespace modbound
