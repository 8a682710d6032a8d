#pragma once

// s-dependent Hamiltonians on an optical path: K(s) = k0(s) I + kappa(s).sigma.

#include <functional>
#include <utility>

#include "modbound/errors.hpp"
#include "modbound/pauli.hpp"

namespace modbound {

// One evaluation of a profile: scalar part and Pauli coefficient vector.
struct KappaSample {
    double k0 = 0.0;
    Vec3 kappa{};
};

// Hint for quadrature routines: how the integrand behaves at the domain ends.
enum class EndpointBehavior {
    smooth,
    // |kappa(s)| ~ 1/sqrt((s - s0)(s1 - s)) near the ends; bounds integrate
    // under the substitution s = c + r sin(theta) which removes the singularity.
    inverse_sqrt,
};

// Mapping s -> (k0(s), kappa(s)) on [s0, s1]. Evaluations are lazy; the
// evaluator must return finite values on the whole domain.
class HamiltonianProfile {
  public:
    using Evaluator = std::function<KappaSample(double)>;

    HamiltonianProfile(double s0, double s1, Evaluator eval,
                       bool piecewise_smooth = true,
                       EndpointBehavior endpoints = EndpointBehavior::smooth)
        : s0_(s0), s1_(s1), eval_(std::move(eval)),
          piecewise_smooth_(piecewise_smooth), endpoints_(endpoints) {
        if (!(s1 > s0) || !std::isfinite(s0) || !std::isfinite(s1)) {
            throw InvalidInput("HamiltonianProfile: requires finite s1 > s0");
        }
        if (!eval_) {
            throw InvalidInput("HamiltonianProfile: null evaluator");
        }
    }

    double s0() const { return s0_; }
    double s1() const { return s1_; }
    double length() const { return s1_ - s0_; }
    bool piecewise_smooth() const { return piecewise_smooth_; }
    EndpointBehavior endpoints() const { return endpoints_; }

    KappaSample operator()(double s) const {
        KappaSample k = eval_(s);
        if (!std::isfinite(k.k0) || !finite(k.kappa)) {
            throw EvaluationError("profile evaluator returned non-finite value at s = " +
                                  std::to_string(s));
        }
        return k;
    }

    // Zero profile on [s0, s1].
    static HamiltonianProfile zero(double s0, double s1) {
        return HamiltonianProfile(s0, s1, [](double) { return KappaSample{}; });
    }

  private:
    double s0_, s1_;
    Evaluator eval_;
    bool piecewise_smooth_;
    EndpointBehavior endpoints_;
};

// K0 + eps * K1 on a shared domain.
struct PerturbedHamiltonian {
    HamiltonianProfile base;
    HamiltonianProfile perturbation;
    double epsilon = 0.0;

    PerturbedHamiltonian(HamiltonianProfile base_, HamiltonianProfile pert, double eps)
        : base(std::move(base_)), perturbation(std::move(pert)), epsilon(eps) {
        if (base.s0() != perturbation.s0() || base.s1() != perturbation.s1()) {
            throw InvalidInput("PerturbedHamiltonian: base and perturbation domains differ");
        }
        if (!std::isfinite(eps)) {
            throw InvalidInput("PerturbedHamiltonian: non-finite epsilon");
        }
    }

    // Combined profile K0 + eps*K1 (at a possibly overridden epsilon).
    HamiltonianProfile combined(double eps) const {
        const HamiltonianProfile b = base;
        const HamiltonianProfile p = perturbation;
        const EndpointBehavior ep =
            (b.endpoints() == EndpointBehavior::inverse_sqrt ||
             p.endpoints() == EndpointBehavior::inverse_sqrt)
                ? EndpointBehavior::inverse_sqrt
                : EndpointBehavior::smooth;
        return HamiltonianProfile(
            b.s0(), b.s1(),
            [b, p, eps](double s) {
                const KappaSample kb = b(s);
                const KappaSample kp = p(s);
                return KappaSample{kb.k0 + eps * kp.k0, kb.kappa + eps * kp.kappa};
            },
            b.piecewise_smooth() && p.piecewise_smooth(), ep);
    }

    HamiltonianProfile combined() const { return combined(epsilon); }
};

}  // namespace modbound
