#include "modbound/pauli.hpp"

#include <algorithm>
#include <string>

namespace modbound {

namespace {
constexpr Complex kI{0.0, 1.0};
}

Ket Ket::normalized(Complex c0, Complex c1) {
    const double n = std::sqrt(std::norm(c0) + std::norm(c1));
    if (!(n > 0.0) || !std::isfinite(n)) {
        throw InvalidInput("Ket::normalized: zero or non-finite amplitude vector");
    }
    return {c0 / n, c1 / n};
}

double max_abs(const Mat2& m) {
    return std::max(std::max(std::abs(m.m00), std::abs(m.m01)),
                    std::max(std::abs(m.m10), std::abs(m.m11)));
}

double hermiticity_residual(const Mat2& m) { return max_abs(m - m.adjoint()); }

double unitarity_residual(const Mat2& m) {
    return max_abs(m.adjoint() * m - Mat2::identity());
}

Mat2 checked_hermitian(const Mat2& m, double tol) {
    const double r = hermiticity_residual(m);
    if (!(r <= tol)) {
        throw InternalConsistencyError("checked_hermitian: residual " + std::to_string(r));
    }
    return m;
}

Mat2 checked_unitary(const Mat2& m, double tol) {
    const double r = unitarity_residual(m);
    if (!(r <= tol)) {
        throw InternalConsistencyError("checked_unitary: residual " + std::to_string(r));
    }
    return m;
}

Mat2 pauli_matrix(int index) {
    switch (index) {
        case 1:
            return {{0, 0}, {1, 0}, {1, 0}, {0, 0}};
        case 2:
            return {{0, 0}, {0, -1}, {0, 1}, {0, 0}};
        case 3:
            return {{1, 0}, {0, 0}, {0, 0}, {-1, 0}};
        default:
            throw InvalidInput("pauli_matrix: index must be 1, 2 or 3, got " +
                               std::to_string(index));
    }
}

Mat2 generator(Vec3 kappa, double k0) {
    if (!finite(kappa) || !std::isfinite(k0)) {
        throw InvalidInput("generator: non-finite components");
    }
    Mat2 m{{k0 + kappa.x3, 0.0},
           {kappa.x1, -kappa.x2},
           {kappa.x1, kappa.x2},
           {k0 - kappa.x3, 0.0}};
    return checked_hermitian(m);
}

namespace {

// Multiplies by the phase that makes the first component with modulus > 1e-8
// real positive. Deterministic: pure arithmetic on the input.
Ket fix_phase(Ket v) {
    Complex lead = (std::abs(v.a0) > 1e-8) ? v.a0 : v.a1;
    const Complex phase = std::conj(lead) / std::abs(lead);
    return {phase * v.a0, phase * v.a1};
}

}  // namespace

Ket eigenket(Vec3 u_hat, int sign) {
    if (std::abs(u_hat.norm() - 1.0) > kUnitVectorTol) {
        throw InvalidInput("eigenket: direction vector is not unit length");
    }
    if (sign != 1 && sign != -1) {
        throw InvalidInput("eigenket: sign must be +1 or -1");
    }
    // Null-space bases of (sigma.u - sign I), branch chosen away from cancellation.
    Complex c0, c1;
    if (sign == 1) {
        if (u_hat.x3 >= 0.0) {
            c0 = Complex(1.0 + u_hat.x3, 0.0);
            c1 = Complex(u_hat.x1, u_hat.x2);
        } else {
            c0 = Complex(u_hat.x1, -u_hat.x2);
            c1 = Complex(1.0 - u_hat.x3, 0.0);
        }
    } else {
        if (u_hat.x3 >= 0.0) {
            c0 = Complex(u_hat.x1, -u_hat.x2);
            c1 = Complex(-(1.0 + u_hat.x3), 0.0);
        } else {
            c0 = Complex(1.0 - u_hat.x3, 0.0);
            c1 = Complex(-u_hat.x1, -u_hat.x2);
        }
    }
    return fix_phase(Ket::normalized(c0, c1));
}

Vec3 bloch_vector(const Ket& psi) {
    const Complex z = std::conj(psi.a0) * psi.a1;
    return {2.0 * z.real(), 2.0 * z.imag(), std::norm(psi.a0) - std::norm(psi.a1)};
}

Mat2 pauli_exp(Vec3 kappa, double k0, double h) {
    if (!finite(kappa) || !std::isfinite(k0) || !std::isfinite(h)) {
        throw InvalidInput("pauli_exp: non-finite input");
    }
    const double kn = kappa.norm();
    const double theta = kn * h;
    const Complex phase = std::exp(kI * (k0 * h));
    if (theta < 1e-8) {
        // sin(theta)/theta -> 1; avoids 0/0 at |kappa| = 0.
        const Complex d = kI * phase * h;
        Mat2 m{phase * std::cos(theta) + d * kappa.x3,
               d * Complex(kappa.x1, -kappa.x2),
               d * Complex(kappa.x1, kappa.x2),
               phase * std::cos(theta) - d * kappa.x3};
        return checked_unitary(m);
    }
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    const Vec3 u = (1.0 / kn) * kappa;
    const Complex d = kI * (phase * s);
    Mat2 m{phase * c + d * u.x3, d * Complex(u.x1, -u.x2), d * Complex(u.x1, u.x2),
           phase * c - d * u.x3};
    return checked_unitary(m);
}

Mat2 outer(const Ket& a, const Ket& b) {
    return {a.a0 * std::conj(b.a0), a.a0 * std::conj(b.a1), a.a1 * std::conj(b.a0),
            a.a1 * std::conj(b.a1)};
}

}  // namespace modbound
