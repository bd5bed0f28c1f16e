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

#include <cmath>
#include <numbers>

namespace risim {

inline constexpr double speed_of_light = 299792458.0;   // m/s
inline constexpr double free_space_impedance = 376.73;  // ohm
inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;

constexpr double deg2rad(double deg) { return deg * (pi / 180.0); }
constexpr double rad2deg(double rad) { return rad * (180.0 / pi); }

// Principal phase value in (-pi, pi]. Maps 0 to 0 exactly and is exact for
// inputs already inside the interval.
inline double wrap_phase(double x) {
  double r = std::remainder(x, two_pi);
  if (r <= -pi) r += two_pi;  // remainder() can land on -pi for branch-cut inputs
  return r;
}

}  // namespace risim
