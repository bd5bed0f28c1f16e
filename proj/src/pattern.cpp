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

#include "risim/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace risim {

namespace {

constexpr double kPowerFloor = 1e-300;  // keeps log-power finite at exact nulls

void check_angle(double angle, const char* what) {
  if (!std::isfinite(angle) || std::abs(angle) >= pi / 2.0) {
    throw DomainError(std::string(what) + " must satisfy |angle| < pi/2");
  }
}

}  // namespace

double far_field_power(const ColumnProfile& profile, const RisGeometry& geom,
                       double theta_in, double theta_obs) {
  geom.validate();
  profile.validate();
  if (profile.phases.size() != static_cast<std::size_t>(geom.n_columns)) {
    throw DomainError("far_field_power: profile and geometry column counts differ");
  }
  check_angle(theta_in, "far_field_power: theta_in");
  check_angle(theta_obs, "far_field_power: theta_obs");
  const double x = geom.k_d() * (std::sin(theta_in) + std::sin(theta_obs));
  std::complex<double> sum = 0.0;
  for (std::size_t n = 0; n < profile.phases.size(); ++n) {
    sum += std::polar(profile.amplitudes[n],
                      profile.phases[n] + static_cast<double>(n) * x);
  }
  return std::norm(sum);
}

FarFieldCut far_field_cut(const ColumnProfile& profile, const RisGeometry& geom,
                          double theta_in, double grid_step) {
  if (!std::isfinite(grid_step) || grid_step <= 0.0 || grid_step >= pi / 2.0) {
    throw DomainError("far_field_cut: grid step must be in (0, pi/2)");
  }
  FarFieldCut cut;
  for (int k = 1;; ++k) {
    const double angle = -pi / 2.0 + static_cast<double>(k) * grid_step;
    if (angle >= pi / 2.0) break;
    cut.angles.push_back(angle);
    cut.power.push_back(far_field_power(profile, geom, theta_in, angle));
  }
  const std::size_t n = cut.angles.size();
  std::size_t best = 0;
  for (std::size_t k = 1; k < n; ++k) {
    if (cut.power[k] > cut.power[best]) best = k;
  }
  cut.peak_angle = cut.angles[best];
  // Refine with a parabola through log-power at the argmax and neighbors;
  // array-factor peaks are locally quadratic in dB.
  if (best > 0 && best + 1 < n) {
    const double l = std::log10(std::max(cut.power[best - 1], kPowerFloor));
    const double m = std::log10(std::max(cut.power[best], kPowerFloor));
    const double r = std::log10(std::max(cut.power[best + 1], kPowerFloor));
    const double den = l - 2.0 * m + r;
    if (den < 0.0) {
      const double offset =
          std::clamp(0.5 * (l - r) / den * grid_step, -grid_step, grid_step);
      cut.peak_angle += offset;
    }
  }

  // Flag a near-tied second beam well outside the main lobe.
  const double peak_power = cut.power[best];
  const double one_db = std::pow(10.0, -0.1);
  const double lobe_sin =
      std::min(1.0, 2.0 * geom.wavelength() /
                        (static_cast<double>(geom.n_columns) * geom.period_d));
  const double peak_sin = std::sin(cut.angles[best]);
  for (std::size_t k = 0; k < n; ++k) {
    const bool rises_left = k == 0 || cut.power[k] >= cut.power[k - 1];
    const bool rises_right = k + 1 == n || cut.power[k] >= cut.power[k + 1];
    if (!rises_left || !rises_right) continue;
    if (cut.power[k] < peak_power * one_db) continue;
    if (std::abs(std::sin(cut.angles[k]) - peak_sin) > lobe_sin) {
      cut.ambiguous_peak = true;
      break;
    }
  }
  return cut;
}

double peak_angle(const ColumnProfile& profile, const RisGeometry& geom,
                  double theta_in, double grid_step) {
  return far_field_cut(profile, geom, theta_in, grid_step).peak_angle;
}

}  // namespace risim
