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

#include "risim/circuit.hpp"
#include "risim/units.hpp"

namespace risim::testing {

// Published equivalent-circuit fits of the unit cell at the three measured
// incidence angles.
inline CircuitParams row0() {
  return CircuitParams{
      .l_bottom = 15.83e-9, .l_top = 38.26e-9, .r_top = 2.20, .c_top = 15.6e-12};
}

inline CircuitParams row30() {
  return CircuitParams{
      .l_bottom = 15.56e-9, .l_top = 38.92e-9, .r_top = 2.23, .c_top = 8.9e-12};
}

inline CircuitParams row40() {
  return CircuitParams{
      .l_bottom = 14.44e-9, .l_top = 35.56e-9, .r_top = 2.11, .c_top = 200e-12};
}

inline CalibrationTable calibration_table() {
  CalibrationTable table;
  table.provenance = "published unit-cell fits";
  table.entries = {{0.0, row0()}, {deg2rad(30.0), row30()}, {deg2rad(40.0), row40()}};
  return table;
}

inline VaractorModel varactor() {
  VaractorModel v;
  v.c_min = 0.63e-12;
  v.c_max = 2.67e-12;
  v.v_at_cmin = 30.0;
  v.v_at_cmax = 0.0;
  return v;
}

inline UnitCellModel cell_model() {
  UnitCellModel model;
  model.table = calibration_table();
  model.varactor = varactor();
  return model;
}

// Angle-independent cell: one calibration knot served in clamp mode.
inline UnitCellModel single_knot_model() {
  UnitCellModel model = cell_model();
  model.table.entries = {{0.0, row0()}};
  return model;
}

}  // namespace risim::testing
