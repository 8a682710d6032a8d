#pragma once

// Small shared numerics: central/forward difference quotients with one
// Richardson level, and composite Gauss-Legendre quadrature.

#include <cstddef>
#include <functional>
#include <vector>

#include "modbound/errors.hpp"

namespace modbound {

enum class FdMode {
    central,   // [f(x+h) - f(x-h)] / 2h, one Richardson level
    forward,   // [f(x+h) - f(x)] / h  (plain finite-eps quotient)
};

struct FdResult {
    double value = 0.0;
    double error_estimate = 0.0;
};

// Derivative estimate of f at x0. In central mode the value is the Richardson
// extrapolation of the h and h/2 quotients; the estimate combines the observed
// h -> h/2 change with the roundoff floor of the quotient.
FdResult fd_derivative(const std::function<double(double)>& f, double x0, double h,
                       FdMode mode = FdMode::central);

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
// Computed by Newton iteration on the Legendre polynomial; machine accurate.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;

    explicit GaussLegendreRule(std::size_t n);
};

// Composite Gauss-Legendre integral of f over [a, b] with `panels` equal
// panels of a fixed 16-point rule.
double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    std::size_t panels);

// The composite nodes/weights themselves (sorted ascending), for integrands
// that must be evaluated in a single sweep.
void gl_composite_nodes(double a, double b, std::size_t panels,
                        std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace modbound
