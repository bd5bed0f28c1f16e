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

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "risim/error.hpp"
#include "risim/units.hpp"

namespace risim {

// Lumped equivalent circuit of one unit cell, fitted at one incidence angle.
// All values SI: henry, ohm, farad.
struct CircuitParams {
  double l_bottom = 0.0;  // bottom-layer (ground path) inductance
  double l_top = 0.0;     // top-layer patch inductance
  double r_top = 0.0;     // top-layer loss resistance
  double c_top = 0.0;     // top-layer patch capacitance

  void validate() const;  // throws DomainError on non-finite or non-positive values
};

// One calibration knot: circuit parameters fitted at an incidence angle.
struct CalibrationEntry {
  double angle = 0.0;  // radians, in [0, pi/2)
  CircuitParams params;
};

// Angle-indexed table of fitted circuit parameters.
struct CalibrationTable {
  std::vector<CalibrationEntry> entries;  // angles strictly ascending
  std::string provenance;                 // free-text source label

  void validate() const;  // throws DomainError
};

enum class InterpMode { clamp, strict };

// Varactor capacitance limits with the bias voltages that reach them, plus an
// optional measured C-V curve.
struct VaractorModel {
  double c_min = 0.0;    // farad, reached at v_at_cmin
  double c_max = 0.0;    // farad, reached at v_at_cmax
  double v_at_cmin = 30.0;  // volt
  double v_at_cmax = 0.0;   // volt
  // Optional measured bias curve, voltage ascending, capacitance strictly
  // decreasing; endpoints must agree with (v_at_cmax, c_max) and
  // (v_at_cmin, c_min) to within 1e-9 relative.
  std::vector<std::pair<double, double>> cv_table;  // (volt, farad)

  void validate() const;  // throws DomainError
};

// Informational record of the physical unit-cell geometry. Not used by any
// computation.
struct CellMetadata {
  double period_d = 8.0e-3;  // meters
  double a1 = 5.5e-3;        // top-layer patch dimensions, meters
  double a2 = 2.9e-3;
  double a3 = 1.5e-3;
  double a4 = 0.4e-3;
  double h = 2.0e-3;         // substrate thickness, meters
};

// Complete tunable unit cell: angle-dependent circuit plus varactor limits.
struct UnitCellModel {
  CalibrationTable table;
  VaractorModel varactor;
  double z_free_space = free_space_impedance;  // ohm, > 0
  CellMetadata metadata;

  void validate() const;
};

// Equivalent-circuit impedance of the unit cell.
//
// The reactance scale is the plain frequency f in hertz, not the angular
// frequency 2*pi*f. The calibrated resonance frequencies only line up with
// the published unit-cell measurements under this convention; see the
// frequency-convention note in the README before comparing against other
// circuit tools. `angle` is already resolved into `params` by calibration
// lookup and does not enter the formula.
std::complex<double> impedance(double angle, double freq, double cap,
                               const CircuitParams& params);

// Moebius map from impedance to reflection coefficient, gamma = (z - z0)/(z + z0).
std::complex<double> reflection_from_impedance(std::complex<double> z, double z0);

// Reflection coefficient of the unit cell at a given incidence angle,
// frequency and varactor capacitance. Phase is arg() in (-pi, pi], amplitude
// is abs().
std::complex<double> reflection_coefficient(double angle, double freq, double cap,
                                            const UnitCellModel& model,
                                            InterpMode mode = InterpMode::clamp);

// Parallel resonance frequency 1/sqrt((L_B + L_T) * C_T*C/(C_T + C)), under
// the same plain-frequency convention as impedance().
double resonance_frequency(const CircuitParams& params, double cap);

// Piecewise-linear angle interpolation of the calibration table.
// Exact stored values at knots; negative angles mirror to |angle|; beyond the
// last knot, clamp mode holds the end value and strict mode throws.
CircuitParams interpolate_params(const CalibrationTable& table, double angle,
                                 InterpMode mode = InterpMode::clamp);

// Bias-to-capacitance curve. Uses the measured C-V table when present,
// otherwise the abrupt-junction law C(v) = c_max / (1 + v/0.7)^m with m
// fitted so that C(v_at_cmin) = c_min.
double capacitance_from_voltage(const VaractorModel& varactor, double v);

}  // namespace risim
