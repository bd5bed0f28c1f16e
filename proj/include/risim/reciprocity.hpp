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

#include <cstddef>
#include <optional>
#include <vector>

#include "risim/array.hpp"
#include "risim/circuit.hpp"
#include "risim/steering.hpp"

namespace risim {

// Circular statistics of the adjacent-column phase differences of a profile.
struct PhaseStats {
  double delta_phi = 0.0;   // circular mean, radians in (-pi, pi]
  double dispersion = 0.0;  // circular standard deviation, radians
};

// Outcome of one (theta1, theta2) reciprocity cell. Angles are radians.
// Fields after `feasible` hold NaN when the cell's design could not be
// realized; theta3_exact and deviation also hold NaN for evanescent cells.
struct ReciprocityReport {
  double theta1 = 0.0;
  double theta2 = 0.0;
  bool feasible = false;           // every column's capacitance was realized
  double delta_phi_1 = 0.0;        // measured phase step at forward incidence
  double delta_phi_2 = 0.0;        // measured phase step at reverse incidence
  double delta = 0.0;              // (lambda / 2 pi D) * wrap(delta_phi_1 - delta_phi_2)
  bool evanescent = false;         // reverse reflection has no propagating angle
  double theta3_exact = 0.0;       // closed-form reverse reflection angle
  double theta3_first_order = 0.0; // small-delta expansion
  double deviation = 0.0;          // |theta3_exact - theta1|
  double dispersion = 0.0;         // phase-step spread at reverse incidence
};

// Row-major matrix of reports over a theta1 x theta2 grid.
struct ReciprocityScan {
  std::vector<double> theta1_grid;  // radians
  std::vector<double> theta2_grid;
  std::vector<ReciprocityReport> cells;  // theta1-major order

  const ReciprocityReport& at(std::size_t i1, std::size_t i2) const {
    return cells[i1 * theta2_grid.size() + i2];
  }
};

// Closed-form reverse reflection angle:
// theta3 = arcsin(sin theta1 + wrap(delta_phi_1 - delta_phi_2) / k_d).
// Returns nullopt when the arcsin argument leaves [-1, 1] (evanescent .
// outcome, by design not an error). An exactly zero wrapped difference
// returns theta1 unchanged.
std::optional<double> reverse_angle(double theta1, double delta_phi_1,
                                    double delta_phi_2, const RisGeometry& geom);

// First-order expansion theta3 ~ theta1 + delta / cos(theta1). Throws
// UnstableExpansionError for |theta1| > 89 degrees where the expansion is
// meaningless.
double first_order_reverse_angle(double theta1, double delta);

// Measured adjacent-column phase step of a realized profile at the given
// incidence angle: per-column arg Gamma, wrapped adjacent differences, then
// circular mean and standard deviation. Nonzero dispersion means the profile
// is no longer an arithmetic phase progression at this angle.
PhaseStats profile_phase_difference(const UnitCellModel& model,
                                    const ColumnProfile& profile, double angle,
                                    double freq, InterpMode mode = InterpMode::clamp);

// For every (theta1, theta2) pair: design the deflection at theta1, realize
// capacitances, measure the phase step at both incidences, and evaluate the
// closed form. Cells whose design cannot be fully realized are flagged
// infeasible instead of aborting the scan.
ReciprocityScan reciprocity_scan(const UnitCellModel& model, const RisGeometry& geom,
                                 const std::vector<double>& theta1_grid,
                                 const std::vector<double>& theta2_grid,
                                 InterpMode mode = InterpMode::clamp);

// Largest w (radians) such that every cell with max(|theta1|, |theta2|) <= w
// is feasible, propagating, and has deviation <= threshold. Returns -1 when
// even the innermost cells fail.
double largest_square_window(const ReciprocityScan& scan, double threshold);

}  // namespace risim
