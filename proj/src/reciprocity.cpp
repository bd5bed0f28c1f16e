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

#include "risim/reciprocity.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

namespace risim {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

void check_incidence(double angle, const char* what) {
  if (!std::isfinite(angle) || std::abs(angle) >= pi / 2.0) {
    throw DomainError(std::string(what) + " must satisfy |angle| < pi/2");
  }
}

}  // namespace

std::optional<double> reverse_angle(double theta1, double delta_phi_1,
                                    double delta_phi_2, const RisGeometry& geom) {
  geom.validate();
  check_incidence(theta1, "reverse_angle: theta1");
  if (!std::isfinite(delta_phi_1) || !std::isfinite(delta_phi_2)) {
    throw DomainError("reverse_angle: phase differences must be finite");
  }
  const double diff = wrap_phase(delta_phi_1 - delta_phi_2);
  if (diff == 0.0) return theta1;  // reciprocity holds exactly
  const double s = std::sin(theta1) + diff / geom.k_d();
  if (s < -1.0 || s > 1.0) return std::nullopt;  // evanescent outcome
  return std::asin(s);
}

double first_order_reverse_angle(double theta1, double delta) {
  check_incidence(theta1, "first_order_reverse_angle: theta1");
  if (!std::isfinite(delta)) {
    throw DomainError("first_order_reverse_angle: delta must be finite");
  }
  if (std::abs(theta1) > deg2rad(89.0)) {
    throw UnstableExpansionError(
        "first_order_reverse_angle: expansion unreliable beyond 89 degrees");
  }
  return theta1 + delta / std::cos(theta1);
}

PhaseStats profile_phase_difference(const UnitCellModel& model,
                                    const ColumnProfile& profile, double angle,
                                    double freq, InterpMode mode) {
  profile.validate();
  if (profile.capacitances.size() != profile.phases.size()) {
    throw DomainError("profile_phase_difference: profile has no capacitances");
  }
  for (double c : profile.capacitances) {
    if (std::isnan(c)) {
      throw DomainError(
          "profile_phase_difference: profile has unrealized columns");
    }
  }
  const CircuitParams params = interpolate_params(model.table, angle, mode);
  std::vector<double> phases(profile.capacitances.size());
  for (std::size_t i = 0; i < phases.size(); ++i) {
    phases[i] = std::arg(reflection_from_impedance(
        impedance(angle, freq, profile.capacitances[i], params),
        model.z_free_space));
  }
  std::complex<double> sum = 0.0;
  for (std::size_t i = 0; i + 1 < phases.size(); ++i) {
    sum += std::polar(1.0, wrap_phase(phases[i + 1] - phases[i]));
  }
  const auto count = static_cast<double>(phases.size() - 1);
  PhaseStats stats;
  stats.delta_phi = std::arg(sum);
  const double resultant = std::min(std::abs(sum) / count, 1.0);
  stats.dispersion = resultant > 0.0
                         ? std::sqrt(-2.0 * std::log(resultant))
                         : std::numeric_limits<double>::infinity();
  return stats;
}

ReciprocityScan reciprocity_scan(const UnitCellModel& model, const RisGeometry& geom,
                                 const std::vector<double>& theta1_grid,
                                 const std::vector<double>& theta2_grid,
                                 InterpMode mode) {
  model.validate();
  geom.validate();
  if (theta1_grid.empty() || theta2_grid.empty()) {
    throw DomainError("reciprocity_scan: angle grids must be non-empty");
  }
  ReciprocityScan scan;
  scan.theta1_grid = theta1_grid;
  scan.theta2_grid = theta2_grid;
  scan.cells.reserve(theta1_grid.size() * theta2_grid.size());
  for (double t1 : theta1_grid) {
    for (double t2 : theta2_grid) {
      ReciprocityReport cell;
      cell.theta1 = t1;
      cell.theta2 = t2;
      cell.delta_phi_1 = kNan;
      cell.delta_phi_2 = kNan;
      cell.delta = kNan;
      cell.theta3_exact = kNan;
      cell.theta3_first_order = kNan;
      cell.deviation = kNan;
      cell.dispersion = kNan;
      const DeflectionDesign design = design_deflection(geom, t1, t2);
      const DeflectionDesign realized =
          realize_profile(model, design, geom, mode, 1.0);
      cell.feasible = std::all_of(realized.feasible_per_column.begin(),
                                  realized.feasible_per_column.end(),
                                  [](bool ok) { return ok; });
      if (cell.feasible) {
        const PhaseStats forward =
            profile_phase_difference(model, realized.profile, t1, geom.freq, mode);
        const PhaseStats reverse =
            profile_phase_difference(model, realized.profile, t2, geom.freq, mode);
        cell.delta_phi_1 = forward.delta_phi;
        cell.delta_phi_2 = reverse.delta_phi;
        cell.delta =
            wrap_phase(forward.delta_phi - reverse.delta_phi) / geom.k_d();
        cell.dispersion = reverse.dispersion;
        const std::optional<double> theta3 =
            reverse_angle(t1, forward.delta_phi, reverse.delta_phi, geom);
        cell.evanescent = !theta3.has_value();
        if (theta3) {
          cell.theta3_exact = *theta3;
          cell.deviation = std::abs(*theta3 - t1);
        }
        if (std::abs(t1) <= deg2rad(89.0)) {
          cell.theta3_first_order = first_order_reverse_angle(t1, cell.delta);
        }
      }
      scan.cells.push_back(cell);
    }
  }
  return scan;
}

double largest_square_window(const ReciprocityScan& scan, double threshold) {
  if (!std::isfinite(threshold) || threshold < 0.0) {
    throw DomainError("largest_square_window: threshold must be non-negative");
  }
  auto passes = [&](const ReciprocityReport& cell) {
    return cell.feasible && !cell.evanescent && cell.deviation <= threshold;
  };
  std::vector<double> extents;
  extents.reserve(scan.cells.size());
  for (const ReciprocityReport& cell : scan.cells) {
    extents.push_back(std::max(std::abs(cell.theta1), std::abs(cell.theta2)));
  }
  std::vector<double> candidates = extents;
  std::sort(candidates.begin(), candidates.end(), std::greater<>());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  for (double w : candidates) {
    bool all_pass = true;
    for (std::size_t i = 0; i < scan.cells.size(); ++i) {
      if (extents[i] <= w && !passes(scan.cells[i])) {
        all_pass = false;
        break;
      }
    }
    if (all_pass) return w;
  }
  return -1.0;
}

}  // namespace risim
