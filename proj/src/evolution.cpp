#include "modbound/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace modbound {

namespace {

// One midpoint-exponential step applied to a state, no matrix construction.
inline void apply_step(const KappaSample& k, double h, Ket& psi) {
    const double kn = k.kappa.norm();
    const double theta = kn * h;
    const double c = std::cos(theta);
    // sin(theta)/|kappa| with the series-safe limit h as theta -> 0
    const double s = (theta < 1e-8) ? h : std::sin(theta) / kn;
    const double sx1 = s * k.kappa.x1;
    const double sx2 = s * k.kappa.x2;
    const double sx3 = s * k.kappa.x3;
    const Complex i{0.0, 1.0};
    const Complex b0 = (c + i * sx3) * psi.a0 + i * Complex(sx1, -sx2) * psi.a1;
    const Complex b1 = i * Complex(sx1, sx2) * psi.a0 + (c - i * sx3) * psi.a1;
    if (k.k0 != 0.0) {
        const double ph = k.k0 * h;
        const Complex phase{std::cos(ph), std::sin(ph)};
        psi.a0 = phase * b0;
        psi.a1 = phase * b1;
    } else {
        psi.a0 = b0;
        psi.a1 = b1;
    }
}

void check_steps(std::size_t steps) {
    if (steps == 0) {
        throw InvalidInput("propagate: steps must be >= 1");
    }
}

void check_normalized(const Ket& psi) {
    if (std::abs(psi.norm() - 1.0) > 1e-10) {
        throw InvalidInput("propagate: initial state is not normalized");
    }
}

}  // namespace

PropagationResult propagate(const HamiltonianProfile& profile, const Ket& psi_i,
                            std::size_t steps, std::size_t record) {
    check_steps(steps);
    check_normalized(psi_i);

    const double s0 = profile.s0();
    const double h = profile.length() / static_cast<double>(steps);

    PropagationResult result;
    result.psi_f = psi_i;
    result.propagator = Mat2::identity();

    std::vector<std::size_t> record_at;
    if (record > 0) {
        const std::size_t n = std::max<std::size_t>(record, 2);
        record_at.reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            // Step boundaries closest to uniform spacing, deduplicated.
            const std::size_t idx = static_cast<std::size_t>(
                std::llround(static_cast<double>(j) * static_cast<double>(steps) /
                             static_cast<double>(n - 1)));
            if (record_at.empty() || idx > record_at.back()) {
                record_at.push_back(idx);
            }
        }
        result.trajectory.emplace();
        result.trajectory->samples.reserve(record_at.size());
    }

    std::size_t next_record = 0;
    auto maybe_record = [&](std::size_t boundary, double s) {
        if (next_record < record_at.size() && record_at[next_record] == boundary) {
            result.trajectory->samples.push_back(
                {s, result.psi_f, bloch_vector(result.psi_f)});
            ++next_record;
        }
    };

    if (record > 0) maybe_record(0, s0);

    for (std::size_t k = 0; k < steps; ++k) {
        const double s_mid = s0 + (static_cast<double>(k) + 0.5) * h;
        const KappaSample sample = profile(s_mid);
        apply_step(sample, h, result.psi_f);
        result.propagator = pauli_exp(sample.kappa, sample.k0, h) * result.propagator;
        if (record > 0) {
            const double s_here =
                (k + 1 == steps) ? profile.s1() : s0 + static_cast<double>(k + 1) * h;
            maybe_record(k + 1, s_here);
        }
    }

    if (std::abs(result.psi_f.norm() - 1.0) > 1e-10) {
        throw InternalConsistencyError("propagate: final state norm drifted beyond 1e-10");
    }
    return result;
}

Ket propagate_state(const HamiltonianProfile& profile, const Ket& psi_i, std::size_t steps) {
    check_steps(steps);
    check_normalized(psi_i);
    const double s0 = profile.s0();
    const double h = profile.length() / static_cast<double>(steps);
    Ket psi = psi_i;
    for (std::size_t k = 0; k < steps; ++k) {
        const double s_mid = s0 + (static_cast<double>(k) + 0.5) * h;
        apply_step(profile(s_mid), h, psi);
    }
    return psi;
}

Mat2 propagator_between(const HamiltonianProfile& profile, double s_a, double s_b,
                        std::size_t steps) {
    if (!(profile.s0() - 1e-12 <= s_a && s_a <= s_b && s_b <= profile.s1() + 1e-12)) {
        throw InvalidInput("propagator_between: requires s0 <= s_a <= s_b <= s1");
    }
    if (s_a == s_b) {
        return Mat2::identity();
    }
    check_steps(steps);
    const double h = (s_b - s_a) / static_cast<double>(steps);
    Mat2 u = Mat2::identity();
    for (std::size_t k = 0; k < steps; ++k) {
        const double s_mid = s_a + (static_cast<double>(k) + 0.5) * h;
        const KappaSample sample = profile(s_mid);
        u = pauli_exp(sample.kappa, sample.k0, h) * u;
    }
    return checked_unitary(u);
}

std::vector<Mat2> propagator_samples(const HamiltonianProfile& profile,
                                     const std::vector<double>& nodes,
                                     std::size_t steps_hint) {
    check_steps(steps_hint);
    const double h_target = profile.length() / static_cast<double>(steps_hint);
    std::vector<Mat2> out;
    out.reserve(nodes.size());
    Mat2 u = Mat2::identity();
    double s_prev = profile.s0();
    for (double s : nodes) {
        if (s < s_prev - 1e-12 || s > profile.s1() + 1e-12) {
            throw InvalidInput("propagator_samples: nodes must be sorted within the domain");
        }
        const double seg = s - s_prev;
        if (seg > 0.0) {
            const std::size_t n =
                std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(seg / h_target)));
            const double h = seg / static_cast<double>(n);
            for (std::size_t k = 0; k < n; ++k) {
                const double s_mid = s_prev + (static_cast<double>(k) + 0.5) * h;
                const KappaSample sample = profile(s_mid);
                u = pauli_exp(sample.kappa, sample.k0, h) * u;
            }
        }
        out.push_back(u);
        s_prev = s;
    }
    return out;
}

Mat2 interaction_picture(const HamiltonianProfile& h0, const Mat2& a, double s,
                         std::size_t steps) {
    if (s < h0.s0() - 1e-12 || s > h0.s1() + 1e-12) {
        throw InvalidInput("interaction_picture: s outside the profile domain");
    }
    if (hermiticity_residual(a) > kHermitianTol) {
        throw InvalidInput("interaction_picture: operator is not Hermitian");
    }
    const Mat2 u = propagator_between(h0, h0.s0(), std::min(std::max(s, h0.s0()), h0.s1()),
                                      steps);
    return checked_hermitian(u.adjoint() * a * u, 1e-10);
}

std::size_t default_step_count(const HamiltonianProfile& profile) {
    constexpr std::size_t n_probe = 256;
    const double h = profile.length() / static_cast<double>(n_probe);
    double arc = 0.0;
    for (std::size_t k = 0; k < n_probe; ++k) {
        const double s_mid = profile.s0() + (static_cast<double>(k) + 0.5) * h;
        arc += profile(s_mid).kappa.norm() * h;
    }
    const double wanted = 2e4 * arc;
    const double capped = std::min(wanted, 4e6);
    return std::max<std::size_t>(1000, static_cast<std::size_t>(std::llround(capped)));
}

}  // namespace modbound
