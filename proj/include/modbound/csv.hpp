#pragma once

// CSV emission with a stable schema per output kind: fixed header, a schema
// version comment, and locale-independent 17-significant-digit numbers so
// identical inputs produce byte-identical files.

#include <ostream>
#include <string>
#include <vector>

#include "modbound/evolution.hpp"
#include "modbound/profile.hpp"
#include "modbound/responsivity.hpp"
#include "modbound/scenarios.hpp"

namespace modbound {

// Shortest-exact-or-17-significant-digit decimal form via std::to_chars.
std::string format_double(double v);

// Columns: s, Bloch vector, unit generator direction (zeros where kappa = 0).
void write_trajectory_csv(std::ostream& out, const HamiltonianProfile& profile,
                          const Trajectory& trajectory);

void write_sweep_csv(std::ostream& out, const std::vector<SweepRecord>& records);

void write_report_csv(std::ostream& out, const ResponsivityReport& report);

}  // namespace modbound
