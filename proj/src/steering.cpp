// SPDX-License-Identifier: Apache-2.0
//
// risim - angle-dependent phase-shifter simulation for varactor-based
// reconfigurable intelligent surfaces
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "risim/steering.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace risim {

namespace {

constexpr double kPhaseTolerance = 1e-6;  // rad, inversion acceptance
constexpr int kBisectionCap = 200;

double positive_mod_two_pi(double x) {
  double r = std::fmod(x, two_pi);
  if (r < 0.0) r += two_pi;
  return r;
}

std::vector<double> capacitance_grid(const VaractorModel& v, int n) {
  std::vector<double> grid(static_cast<std::size_t>(n));
  const double span = std::log(v.c_max / v.c_min);
  for (int i = 0; i < n; ++i) {
    grid[static_cast<std::size_t>(i)] = v.c_min * std::exp(span * i / (n - 1));
  }
  grid.front() = v.c_min;
  grid.back() = v.c_max;
  return grid;
}

// Start phase and length of the largest circular gap between the sampled
// phases; the reachable arc is its complement.
struct CircularGap {
  double start = 0.0;   // phase of the sample the gap begins at
  double end = 0.0;     // phase of the sample the gap ends at
  double length = 0.0;  // radians in [0, 2*pi]
};

CircularGap largest_gap(std::vector<double> phases) {
  std::sort(phases.begin(), phases.end());
  CircularGap gap;
  gap.length = -1.0;
  const std::size_t n = phases.size();
  for (std::size_t k = 0; k < n; ++k) {
    const double lo = phases[k];
    const double hi = k + 1 < n ? phases[k + 1] : phases[0];
    // Sorted inputs keep both branches in [0, 2*pi]; the wraparound gap of a
    // single repeated phase is the full circle.
    const double len = k + 1 < n ? hi - lo : hi + two_pi - lo;
    if (len > gap.length) {
      gap = CircularGap{.start = lo, .end = hi, .length = len};
    }
  }
  return gap;
}

void check_steer_angle(double angle, const char* what) {
  if (!std::isfinite(angle) || std::abs(angle) >= pi / 2.0) {
    throw DomainError(std::string(what) + " must satisfy |angle| < pi/2");
  }
}

}  // namespace

DeflectionDesign design_deflection(const RisGeometry& geom, double theta_in,
                                   double theta_out) {
  geom.validate();
  check_steer_angle(theta_in, "design_deflection: theta_in");
  check_steer_angle(theta_out, "design_deflection: theta_out");
  DeflectionDesign d;
  d.theta_in = theta_in;
  d.theta_out = theta_out;
  d.delta_phi =
      wrap_phase(-geom.k_d() * (std::sin(theta_in) + std::sin(theta_out)));
  const auto n = static_cast<std::size_t>(geom.n_columns);
  d.profile.phases.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    d.profile.phases[i] = wrap_phase(static_cast<double>(i) * d.delta_phi);
  }
  d.profile.amplitudes.assign(n, 1.0);
  return d;
}

double phase_to_capacitance(const UnitCellModel& model, double angle, double freq,
                            double target_phase, InterpMode mode, int grid_points) {
  model.validate();
  if (grid_points < 2) {
    throw DomainError("phase_to_capacitance: need at least two grid points");
  }
  if (!std::isfinite(target_phase)) {
    throw DomainError("phase_to_capacitance: target phase must be finite");
  }
  const CircuitParams params = interpolate_params(model.table, angle, mode);
  const double goal = wrap_phase(target_phase);
  auto mismatch = [&](double cap) {
    const std::complex<double> gamma = reflection_from_impedance(
        impedance(angle, freq, cap, params), model.z_free_space);
    return wrap_phase(std::arg(gamma) - goal);
  };

  const std::vector<double> grid = capacitance_grid(model.varactor, grid_points);
  std::vector<double> g(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    g[i] = mismatch(grid[i]);
    if (g[i] == 0.0) return grid[i];
  }
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    if ((g[i] < 0.0) == (g[i + 1] < 0.0)) continue;
    double lo = grid[i];
    double hi = grid[i + 1];
    double g_lo = g[i];
    for (int it = 0; it < kBisectionCap; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;  // interval below double resolution
      const double g_mid = mismatch(mid);
      if (g_mid == 0.0) {
        lo = hi = mid;
        break;
      }
      if ((g_mid < 0.0) == (g_lo < 0.0)) {
        lo = mid;
        g_lo = g_mid;
      } else {
        hi = mid;
      }
    }
    const double c_star = 0.5 * (lo + hi);
    if (std::abs(mismatch(c_star)) <= kPhaseTolerance) return c_star;
    // This sign change was the +-pi branch-cut jump, not a root; keep looking.
  }

  // No bracket produced a root. Decide which failure this is from the arc the
  // sampled phases cover.
  std::vector<double> phases(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    phases[i] = wrap_phase(g[i] + goal);
  }
  const CircularGap gap = largest_gap(std::move(phases));
  const double off = positive_mod_two_pi(goal - gap.start);
  if (off > 0.0 && off < gap.length) {
    throw InfeasiblePhaseError(
        "phase_to_capacitance: target phase outside the tunable arc");
  }
  throw NonMonotonePhaseError(
      "phase_to_capacitance: no sign-changing bracket around a reachable target");
}

DeflectionDesign realize_profile(const UnitCellModel& model,
                                 const DeflectionDesign& design,
                                 const RisGeometry& geom, InterpMode mode,
                                 double max_infeasible_fraction) {
  geom.validate();
  design.profile.validate();
  if (design.profile.phases.size() != static_cast<std::size_t>(geom.n_columns)) {
    throw DomainError("realize_profile: design and geometry column counts differ");
  }
  if (!std::isfinite(max_infeasible_fraction) || max_infeasible_fraction < 0.0 ||
      max_infeasible_fraction > 1.0) {
    throw DomainError("realize_profile: infeasible fraction must be in [0, 1]");
  }
  DeflectionDesign out = design;
  const std::size_t n = design.profile.phases.size();
  out.profile.capacitances.assign(n, std::numeric_limits<double>::quiet_NaN());
  out.feasible_per_column.assign(n, false);
  std::size_t failures = 0;
  for (std::size_t i = 0; i < n; ++i) {
    try {
      out.profile.capacitances[i] = phase_to_capacitance(
          model, design.theta_in, geom.freq, design.profile.phases[i], mode);
      out.feasible_per_column[i] = true;
    } catch (const InfeasiblePhaseError&) {
      ++failures;
    } catch (const NonMonotonePhaseError&) {
      ++failures;
    }
  }
  if (static_cast<double>(failures) >
      max_infeasible_fraction * static_cast<double>(n)) {
    throw InfeasibleProfileError("realize_profile: " + std::to_string(failures) +
                                 " of " + std::to_string(n) +
                                 " columns are infeasible");
  }
  return out;
}

PhaseRange tunable_phase_range(const UnitCellModel& model, double angle, double freq,
                               InterpMode mode, int grid_points) {
  model.validate();
  if (grid_points < 2) {
    throw DomainError("tunable_phase_range: need at least two grid points");
  }
  const CircuitParams params = interpolate_params(model.table, angle, mode);
  const std::vector<double> grid = capacitance_grid(model.varactor, grid_points);
  std::vector<double> phases(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    phases[i] = std::arg(reflection_from_impedance(
        impedance(angle, freq, grid[i], params), model.z_free_space));
  }
  const CircularGap gap = largest_gap(std::move(phases));
  return PhaseRange{.lo = gap.end, .hi = gap.start, .width = two_pi - gap.length};
}

double select_operating_frequency(const UnitCellModel& model, double angle,
                                  const std::vector<double>& f_grid,
                                  InterpMode mode) {
  if (f_grid.empty()) {
    throw DomainError("select_operating_frequency: empty frequency grid");
  }
  double best_freq = 0.0;
  double best_width = -1.0;
  for (double f : f_grid) {
    const double width = tunable_phase_range(model, angle, f, mode).width;
    if (width > best_width || (width == best_width && f < best_freq)) {
      best_width = width;
      best_freq = f;
    }
  }
  return best_freq;
}

}  // namespace risim
