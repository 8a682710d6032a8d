#pragma once

// Analytic and quadrature evaluation of the responsivity and modulation-depth
// bounds: the Schwartz-inequality bound, the two-mode Pauli arc bound, the
// Bloch-angle bound, the minimum path length for full modulation, and the
// closed form pi*lambda for the Zener sweep.

#include <cstddef>

#include "modbound/evolution.hpp"
#include "modbound/pauli.hpp"
#include "modbound/profile.hpp"

namespace modbound {

enum class BoundKind {
    schwartz,
    pauli_arc,
    bloch_angle,
    full_modulation_length,
    zener_closed_form,
};

struct BoundReport {
    double value = 0.0;
    BoundKind kind = BoundKind::schwartz;
    double quadrature_error_estimate = 0.0;
};

// integral ds sqrt(<K1H^2> - <K1H>^2) over the path, with the interaction
// picture taken under h0 and the expectation in psi_i. Composite
// Gauss-Legendre with `panels` panels; the reported value uses 2*panels and
// the error estimate is |I(2N) - I(N)|. steps_hint = 0 selects the default
// propagation resolution.
BoundReport schwartz_bound(const HamiltonianProfile& h0, const HamiltonianProfile& k1,
                           const Ket& psi_i, std::size_t panels,
                           std::size_t steps_hint = 0);

// integral ds |kappa_1(s)|. Profiles flagged inverse_sqrt are integrated
// under s = c + r sin(theta), which makes the Zener-case integrand constant.
BoundReport pauli_arc_bound(const HamiltonianProfile& k1, std::size_t panels);

// 2 |eps| integral ds |kappa_1(s)|.
BoundReport bloch_angle_bound(const HamiltonianProfile& k1, double eps,
                              std::size_t panels);

// Minimum path length pi / (2 kappa_max) for full modulation.
double full_modulation_min_length(double kappa_max);

// pi * lambda, the arc bound of the Zener sweep in closed form.
BoundReport zener_closed_form_bound(double lambda);

}  // namespace modbound
