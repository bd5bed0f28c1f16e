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

#pragma once

#include <vector>

#include "risim/array.hpp"
#include "risim/circuit.hpp"

namespace risim {

// A phase-gradient deflection: incident theta_in is steered to theta_out by
// the arithmetic phase progression phases[n] = wrap(n * delta_phi) (0-based,
// first column normalized to zero phase).
struct DeflectionDesign {
  double theta_in = 0.0;   // radians
  double theta_out = 0.0;  // radians
  double delta_phi = 0.0;  // adjacent-column phase step, radians in (-pi, pi]
  ColumnProfile profile;
  // One flag per column once realized; empty before realization.
  std::vector<bool> feasible_per_column;
};

// Circular arc of reflection phases reachable by tuning the capacitance.
// The arc runs counterclockwise from `lo` to `hi`; both ends lie in
// (-pi, pi], so `hi` < `lo` numerically when the arc crosses the branch cut.
struct PhaseRange {
  double lo = 0.0;     // radians, arc start
  double hi = 0.0;     // radians, arc end
  double width = 0.0;  // circular span in [0, 2*pi)
};

// Phase gradient steering theta_in toward theta_out:
// delta_phi = wrap(-k_d (sin theta_in + sin theta_out)). Capacitances are
// left unset.
DeflectionDesign design_deflection(const RisGeometry& geom, double theta_in,
                                   double theta_out);

// Invert the reflection phase over the varactor range: find C* in
// [c_min, c_max] with |wrap(arg Gamma(angle, freq, C*) - target_phase)| <=
// 1e-6 rad. Brackets are located on a log-spaced capacitance grid and
// refined by bisection; a sign change that turns out to be the branch-cut
// jump rather than a root is skipped. Throws InfeasiblePhaseError when the
// target lies outside the reachable phase arc and NonMonotonePhaseError when
// no grid bracket sign-changes around a reachable target.
double phase_to_capacitance(const UnitCellModel& model, double angle, double freq,
                            double target_phase, InterpMode mode = InterpMode::clamp,
                            int grid_points = 64);

// Realize every column of a design at the design incidence angle and the
// geometry's carrier frequency. Columns whose target phase is unreachable
// keep their phase, get a NaN capacitance and a false feasibility flag.
// Throws InfeasibleProfileError when more than max_infeasible_fraction of
// the columns fail.
DeflectionDesign realize_profile(const UnitCellModel& model,
                                 const DeflectionDesign& design,
                                 const RisGeometry& geom,
                                 InterpMode mode = InterpMode::clamp,
                                 double max_infeasible_fraction = 0.0);

// Reachable reflection-phase arc at one incidence angle and frequency,
// sampled on a log-spaced capacitance grid.
PhaseRange tunable_phase_range(const UnitCellModel& model, double angle, double freq,
                               InterpMode mode = InterpMode::clamp,
                               int grid_points = 64);

// Grid frequency whose tunable phase width is largest at the given angle;
// ties break to the lowest frequency.
double select_operating_frequency(const UnitCellModel& model, double angle,
                                  const std::vector<double>& f_grid,
                                  InterpMode mode = InterpMode::clamp);

}  // namespace risim
