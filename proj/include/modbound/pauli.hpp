#pragma once

// Exact complex 2x2 linear algebra specialized to the Pauli decomposition:
// two-component field states, traceless Hermitian generators kappa.sigma,
// closed-form exponentials and eigenkets, Bloch-vector maps.

#include <array>
#include <cmath>
#include <complex>

#include "modbound/errors.hpp"

namespace modbound {

using Complex = std::complex<double>;

inline constexpr double kHermitianTol = 1e-12;
inline constexpr double kUnitaryTol = 1e-10;
inline constexpr double kUnitVectorTol = 1e-10;

// Real 3-vector: a Pauli coefficient vector (units 1/length for generators)
// or a dimensionless Bloch vector.
struct Vec3 {
    double x1 = 0.0;
    double x2 = 0.0;
    double x3 = 0.0;

    double norm() const { return std::sqrt(x1 * x1 + x2 * x2 + x3 * x3); }

    friend Vec3 operator+(Vec3 a, Vec3 b) { return {a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3}; }
    friend Vec3 operator-(Vec3 a, Vec3 b) { return {a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3}; }
    friend Vec3 operator*(double c, Vec3 a) { return {c * a.x1, c * a.x2, c * a.x3}; }
};

inline double dot(Vec3 a, Vec3 b) { return a.x1 * b.x1 + a.x2 * b.x2 + a.x3 * b.x3; }

inline Vec3 cross(Vec3 a, Vec3 b) {
    return {a.x2 * b.x3 - a.x3 * b.x2, a.x3 * b.x1 - a.x1 * b.x3, a.x1 * b.x2 - a.x2 * b.x1};
}

inline bool finite(Vec3 a) {
    return std::isfinite(a.x1) && std::isfinite(a.x2) && std::isfinite(a.x3);
}

// Normalized two-component complex field amplitude vector.
struct Ket {
    Complex a0{0.0, 0.0};
    Complex a1{0.0, 0.0};

    double norm() const { return std::sqrt(std::norm(a0) + std::norm(a1)); }

    // Normalizing constructor; rejects the zero vector.
    static Ket normalized(Complex c0, Complex c1);
};

// <a|b>
inline Complex inner(const Ket& a, const Ket& b) {
    return std::conj(a.a0) * b.a0 + std::conj(a.a1) * b.a1;
}

// Complex 2x2 matrix, row-major.
struct Mat2 {
    Complex m00, m01, m10, m11;

    static Mat2 identity() { return {{1, 0}, {0, 0}, {0, 0}, {1, 0}}; }
    static Mat2 zero() { return {{0, 0}, {0, 0}, {0, 0}, {0, 0}}; }

    Mat2 adjoint() const {
        return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
    }

    Complex trace() const { return m00 + m11; }

    Ket apply(const Ket& v) const {
        return {m00 * v.a0 + m01 * v.a1, m10 * v.a0 + m11 * v.a1};
    }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
                a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
    }
    friend Mat2 operator+(const Mat2& a, const Mat2& b) {
        return {a.m00 + b.m00, a.m01 + b.m01, a.m10 + b.m10, a.m11 + b.m11};
    }
    friend Mat2 operator-(const Mat2& a, const Mat2& b) {
        return {a.m00 - b.m00, a.m01 - b.m01, a.m10 - b.m10, a.m11 - b.m11};
    }
    friend Mat2 operator*(Complex c, const Mat2& a) {
        return {c * a.m00, c * a.m01, c * a.m10, c * a.m11};
    }
};

// max |entry| of M
double max_abs(const Mat2& m);

// max-norm Hermiticity residual ||M - M^dagger||_max
double hermiticity_residual(const Mat2& m);

// max-norm unitarity residual ||M^dagger M - I||_max
double unitarity_residual(const Mat2& m);

// Checked constructors: return the matrix after verifying the tagged property.
Mat2 checked_hermitian(const Mat2& m, double tol = kHermitianTol);
Mat2 checked_unitary(const Mat2& m, double tol = kUnitaryTol);

// sigma_1, sigma_2, sigma_3. Index outside {1,2,3} is rejected.
Mat2 pauli_matrix(int index);

// k0*I + kappa.sigma (Hermitian by construction; verified).
Mat2 generator(Vec3 kappa, double k0);

// Normalized eigenket of sigma.u_hat with eigenvalue sign (+1 or -1).
// Phase convention: the first component with modulus > 1e-8 is real positive.
Ket eigenket(Vec3 u_hat, int sign);

// (<sigma_1>, <sigma_2>, <sigma_3>) for a normalized state.
Vec3 bloch_vector(const Ket& psi);

// exp(i (k0 I + kappa.sigma) h) in closed form:
//   e^{i k0 h} [cos(|kappa| h) I + i sin(|kappa| h) kappa_hat.sigma]
// with a series-safe branch for |kappa| h -> 0. Unitary by construction; verified.
Mat2 pauli_exp(Vec3 kappa, double k0, double h);

// Outer product |a><b|
Mat2 outer(const Ket& a, const Ket& b);

}  // namespace modbound
