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

namespace risim {

// Sampled far-field observation cut. Power is the raw array factor |AF|^2,
// not normalized.
struct FarFieldCut {
  std::vector<double> angles;  // radians, strictly inside (-pi/2, pi/2)
  std::vector<double> power;   // linear scale, >= 0
  double peak_angle = 0.0;     // parabolic-refined argmax, radians
  // Warning flag: a second local maximum within 1 dB of the peak lies more
  // than one main-lobe width away, so `peak_angle` picked between near-equal
  // beams.
  bool ambiguous_peak = false;
};

// Array-factor power radiated toward theta_obs when the profile is
// illuminated from theta_in:
// |sum_n A_n e^{j phi_n} e^{j n k_d (sin theta_in + sin theta_obs)}|^2.
// Deliberately built only from the array response sums so it can serve as an
// independent cross-check of the closed-form reverse-angle expression.
double far_field_power(const ColumnProfile& profile, const RisGeometry& geom,
                       double theta_in, double theta_obs);

// Sample the observation cut over (-pi/2, pi/2) at grid_step and refine the
// argmax by a three-point parabolic fit of log-power.
FarFieldCut far_field_cut(const ColumnProfile& profile, const RisGeometry& geom,
                          double theta_in, double grid_step);

// Refined argmax of the observation cut.
double peak_angle(const ColumnProfile& profile, const RisGeometry& geom,
                  double theta_in, double grid_step);

}  // namespace risim
