#include "modbound/csv.hpp"

#include <array>
#include <charconv>

namespace modbound {

std::string format_double(double v) {
    std::array<char, 64> buf{};
    auto [ptr, ec] =
        std::to_chars(buf.data(), buf.data() + buf.size(), v,
                      std::chars_format::general, 17);
    return std::string(buf.data(), ptr);
}

void write_trajectory_csv(std::ostream& out, const HamiltonianProfile& profile,
                          const Trajectory& trajectory) {
    out << "# modbound csv trajectory v1\n";
    out << "s,p1,p2,p3,k1,k2,k3\n";
    for (const TrajectorySample& sample : trajectory.samples) {
        const KappaSample ks = profile(sample.s);
        const double kn = ks.kappa.norm();
        Vec3 khat{0.0, 0.0, 0.0};
        if (kn > 0.0) {
            khat = (1.0 / kn) * ks.kappa;
        }
        out << format_double(sample.s) << ',' << format_double(sample.bloch.x1) << ','
            << format_double(sample.bloch.x2) << ',' << format_double(sample.bloch.x3)
            << ',' << format_double(khat.x1) << ',' << format_double(khat.x2) << ','
            << format_double(khat.x3) << '\n';
    }
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records) {
    out << "# modbound csv sweep v1\n";
    out << "lambda,T,dT_dlambda,bound,approx,ratio\n";
    for (const SweepRecord& r : records) {
        out << format_double(r.lambda) << ',' << format_double(r.T) << ','
            << format_double(r.dT_dlambda) << ',' << format_double(r.bound_pi_lambda)
            << ',' << format_double(r.T_bessel_approx) << ','
            << format_double(r.saturation_ratio) << '\n';
    }
}

void write_report_csv(std::ostream& out, const ResponsivityReport& report) {
    out << "# modbound csv report v1\n";
    out << "T0,T_eps,dT_deps,eps_used,bound_schwartz,bound_pauli,saturation_ratio\n";
    out << format_double(report.T0) << ',' << format_double(report.T_eps) << ','
        << format_double(report.dT_deps) << ',' << format_double(report.eps_used) << ','
        << format_double(report.bound_schwartz) << ',' << format_double(report.bound_pauli)
        << ',' << format_double(report.saturation_ratio) << '\n';
}

}  // namespace modbound
