#include "modbound/numerics.hpp"

#include <cmath>
#include <limits>

namespace modbound {

FdResult fd_derivative(const std::function<double(double)>& f, double x0, double h,
                       FdMode mode) {
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw InvalidInput("fd_derivative: step must be positive and finite");
    }
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (mode == FdMode::forward) {
        const double f0 = f(x0);
        const double f1 = f(x0 + h);
        const double d = (f1 - f0) / h;
        // First-order truncation dominates; report the h-scale directly.
        return {d, std::abs(d) * h + 4.0 * eps * (std::abs(f0) + std::abs(f1)) / h};
    }
    const double d_h = (f(x0 + h) - f(x0 - h)) / (2.0 * h);
    const double d_h2 = (f(x0 + 0.5 * h) - f(x0 - 0.5 * h)) / h;
    const double richardson = (4.0 * d_h2 - d_h) / 3.0;
    const double est = std::abs(richardson - d_h2) + 16.0 * eps / h;
    return {richardson, est};
}

GaussLegendreRule::GaussLegendreRule(std::size_t n) {
    if (n == 0) {
        throw InvalidInput("GaussLegendreRule: n must be positive");
    }
    nodes.resize(n);
    weights.resize(n);
    const std::size_t m = (n + 1) / 2;
    for (std::size_t i = 0; i < m; ++i) {
        // Chebyshev-based initial guess, then Newton on P_n.
        double x = std::cos(M_PI * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double kk = static_cast<double>(k);
                const double p2 = ((2.0 * kk - 1.0) * x * p1 - (kk - 1.0) * p0) / kk;
                p0 = p1;
                p1 = p2;
            }
            dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) {
                // one polishing pass after convergence
                double q0 = 1.0, q1 = x;
                for (std::size_t k = 2; k <= n; ++k) {
                    const double kk = static_cast<double>(k);
                    const double q2 = ((2.0 * kk - 1.0) * x * q1 - (kk - 1.0) * q0) / kk;
                    q0 = q1;
                    q1 = q2;
                }
                dp = static_cast<double>(n) * (x * q1 - q0) / (x * x - 1.0);
                x -= q1 / dp;
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
}

namespace {
const GaussLegendreRule& rule16() {
    static const GaussLegendreRule rule(16);
    return rule;
}
}  // namespace

void gl_composite_nodes(double a, double b, std::size_t panels,
                        std::vector<double>& nodes, std::vector<double>& weights) {
    if (panels == 0) {
        throw InvalidInput("gl_composite_nodes: panels must be positive");
    }
    const GaussLegendreRule& r = rule16();
    const double h = (b - a) / static_cast<double>(panels);
    nodes.clear();
    weights.clear();
    nodes.reserve(panels * r.nodes.size());
    weights.reserve(panels * r.nodes.size());
    for (std::size_t p = 0; p < panels; ++p) {
        const double lo = a + static_cast<double>(p) * h;
        const double mid = lo + 0.5 * h;
        for (std::size_t j = 0; j < r.nodes.size(); ++j) {
            nodes.push_back(mid + 0.5 * h * r.nodes[j]);
            weights.push_back(0.5 * h * r.weights[j]);
        }
    }
}

double integrate_gl(const std::function<double(double)>& f, double a, double b,
                    std::size_t panels) {
    std::vector<double> nodes, weights;
    gl_composite_nodes(a, b, panels, nodes, weights);
    double total = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        total += weights[i] * f(nodes[i]);
    }
    return total;
}

}  // namespace modbound
