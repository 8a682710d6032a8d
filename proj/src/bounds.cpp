#include "modbound/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "modbound/numerics.hpp"

namespace modbound {

namespace {

// Composite-GL nodes/weights on the profile domain, in the substituted
// variable when the profile declares inverse-sqrt endpoints. Nodes come out
// sorted ascending in s either way.
void profile_quadrature(const HamiltonianProfile& profile, std::size_t panels,
                        std::vector<double>& nodes, std::vector<double>& weights) {
    if (profile.endpoints() == EndpointBehavior::inverse_sqrt) {
        const double c = 0.5 * (profile.s0() + profile.s1());
        const double r = 0.5 * (profile.s1() - profile.s0());
        std::vector<double> th_nodes, th_weights;
        gl_composite_nodes(-0.5 * M_PI, 0.5 * M_PI, panels, th_nodes, th_weights);
        nodes.resize(th_nodes.size());
        weights.resize(th_nodes.size());
        for (std::size_t i = 0; i < th_nodes.size(); ++i) {
            nodes[i] = c + r * std::sin(th_nodes[i]);
            weights[i] = th_weights[i] * r * std::cos(th_nodes[i]);
        }
    } else {
        gl_composite_nodes(profile.s0(), profile.s1(), panels, nodes, weights);
    }
}

double arc_integral(const HamiltonianProfile& k1, std::size_t panels) {
    std::vector<double> nodes, weights;
    profile_quadrature(k1, panels, nodes, weights);
    double total = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        total += weights[i] * k1(nodes[i]).kappa.norm();
    }
    return total;
}

double schwartz_integral(const HamiltonianProfile& h0, const HamiltonianProfile& k1,
                         const Ket& psi_i, std::size_t panels, std::size_t steps_hint) {
    std::vector<double> nodes, weights;
    profile_quadrature(k1, panels, nodes, weights);
    const std::vector<Mat2> u0 = propagator_samples(h0, nodes, steps_hint);
    double total = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const KappaSample ks = k1(nodes[i]);
        const Mat2 gen = generator(ks.kappa, ks.k0);
        const Mat2 k1h = u0[i].adjoint() * gen * u0[i];
        const Ket v = k1h.apply(psi_i);
        const double e = inner(psi_i, v).real();
        double var = inner(v, v).real() - e * e;
        if (var < -1e-12) {
            throw InternalConsistencyError("schwartz_bound: negative variance " +
                                           std::to_string(var) + " at s = " +
                                           std::to_string(nodes[i]));
        }
        var = std::max(var, 0.0);
        total += weights[i] * std::sqrt(var);
    }
    return total;
}

}  // namespace

BoundReport schwartz_bound(const HamiltonianProfile& h0, const HamiltonianProfile& k1,
                           const Ket& psi_i, std::size_t panels, std::size_t steps_hint) {
    if (h0.s0() != k1.s0() || h0.s1() != k1.s1()) {
        throw InvalidInput("schwartz_bound: profiles must share a domain");
    }
    if (panels == 0) {
        throw InvalidInput("schwartz_bound: panels must be positive");
    }
    if (steps_hint == 0) {
        steps_hint = default_step_count(h0);
    }
    const double coarse = schwartz_integral(h0, k1, psi_i, panels, steps_hint);
    const double fine = schwartz_integral(h0, k1, psi_i, 2 * panels, steps_hint);
    return {fine, BoundKind::schwartz, std::abs(fine - coarse)};
}

BoundReport pauli_arc_bound(const HamiltonianProfile& k1, std::size_t panels) {
    if (panels == 0) {
        throw InvalidInput("pauli_arc_bound: panels must be positive");
    }
    const double coarse = arc_integral(k1, panels);
    const double fine = arc_integral(k1, 2 * panels);
    return {fine, BoundKind::pauli_arc, std::abs(fine - coarse)};
}

BoundReport bloch_angle_bound(const HamiltonianProfile& k1, double eps,
                              std::size_t panels) {
    BoundReport arc = pauli_arc_bound(k1, panels);
    return {2.0 * std::abs(eps) * arc.value, BoundKind::bloch_angle,
            2.0 * std::abs(eps) * arc.quadrature_error_estimate};
}

double full_modulation_min_length(double kappa_max) {
    if (!(kappa_max > 0.0) || !std::isfinite(kappa_max)) {
        throw InvalidInput("full_modulation_min_length: kappa_max must be positive");
    }
    return M_PI / (2.0 * kappa_max);
}

BoundReport zener_closed_form_bound(double lambda) {
    if (!(lambda >= 0.0)) {
        throw InvalidInput("zener_closed_form_bound: lambda must be non-negative");
    }
    return {M_PI * lambda, BoundKind::zener_closed_form, 0.0};
}

}  // namespace modbound
