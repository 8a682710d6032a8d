#pragma once

// Integration of d|psi>/ds = i K(s) |psi> by the midpoint-exponential scheme:
// each step applies the exact unitary exp(i K(s_mid) h). Unconditionally
// unitary, 2nd order accurate for smooth profiles.

#include <cstdint>
#include <optional>
#include <vector>

#include "modbound/pauli.hpp"
#include "modbound/profile.hpp"

namespace modbound {

struct TrajectorySample {
    double s = 0.0;
    Ket psi{};
    Vec3 bloch{};
};

// Ordered states along the path, strictly increasing in s.
struct Trajectory {
    std::vector<TrajectorySample> samples;
};

struct PropagationResult {
    Ket psi_f{};
    Mat2 propagator = Mat2::identity();
    std::optional<Trajectory> trajectory;
};

// Integrates the profile over [s0, s1] with `steps` equal intervals.
// Returns the final state U|psi_i>, the accumulated unitary U and, when
// `record` > 0, a trajectory with `record` samples at (approximately) equally
// spaced step boundaries, endpoints included.
PropagationResult propagate(const HamiltonianProfile& profile, const Ket& psi_i,
                            std::size_t steps, std::size_t record = 0);

// Final state only; identical arithmetic path to propagate() for the state,
// without accumulating the full propagator.
Ket propagate_state(const HamiltonianProfile& profile, const Ket& psi_i, std::size_t steps);

// Unitary u0(s_b, s_a) over [s_a, s_b] within the profile domain; s_a == s_b
// yields the identity.
Mat2 propagator_between(const HamiltonianProfile& profile, double s_a, double s_b,
                        std::size_t steps);

// Cumulative propagators u0(node, s0) for a sorted list of nodes in [s0, s1].
// The path is traversed once; within each inter-node segment the step size is
// at most length/steps_hint.
std::vector<Mat2> propagator_samples(const HamiltonianProfile& profile,
                                     const std::vector<double>& nodes,
                                     std::size_t steps_hint);

// Interaction-picture operator u0^dag(s, s0) A u0(s, s0) for Hermitian A.
Mat2 interaction_picture(const HamiltonianProfile& h0, const Mat2& a, double s,
                         std::size_t steps);

// Default step-count rule: 2e4 steps per unit of dimensionless arc
// integral |kappa| ds (estimated by a 256-node midpoint sum), minimum 1e3.
std::size_t default_step_count(const HamiltonianProfile& profile);

}  // namespace modbound
