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

#include "risim/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace risim {

namespace {

bool finite(double x) { return std::isfinite(x); }

constexpr double kJunctionVoltage = 0.7;  // volt, abrupt-junction knee

}  // namespace

void CircuitParams::validate() const {
  if (!finite(l_bottom) || !finite(l_top) || !finite(r_top) || !finite(c_top)) {
    throw DomainError("circuit params must be finite");
  }
  if (l_bottom <= 0.0 || l_top <= 0.0 || c_top <= 0.0) {
    throw DomainError("circuit inductances and capacitance must be positive");
  }
  if (r_top < 0.0) {
    throw DomainError("circuit resistance must be non-negative");
  }
}

void CalibrationTable::validate() const {
  if (entries.empty()) {
    throw DomainError("calibration table has no entries");
  }
  double prev = -1.0;
  for (const CalibrationEntry& e : entries) {
    if (!finite(e.angle) || e.angle < 0.0 || e.angle >= pi / 2.0) {
      throw DomainError("calibration angle must lie in [0, pi/2)");
    }
    if (e.angle <= prev) {
      throw DomainError("calibration angles must be strictly ascending");
    }
    prev = e.angle;
    e.params.validate();
  }
}

void VaractorModel::validate() const {
  if (!finite(c_min) || !finite(c_max) || !finite(v_at_cmin) || !finite(v_at_cmax)) {
    throw DomainError("varactor model values must be finite");
  }
  if (!(0.0 < c_min && c_min < c_max)) {
    throw DomainError("varactor requires 0 < c_min < c_max");
  }
  if (!(v_at_cmax < v_at_cmin)) {
    throw DomainError("varactor requires v_at_cmax < v_at_cmin");
  }
  if (cv_table.empty()) return;
  if (cv_table.size() < 2) {
    throw DomainError("varactor C-V table needs at least two points");
  }
  for (std::size_t i = 0; i < cv_table.size(); ++i) {
    const auto& [v, c] = cv_table[i];
    if (!finite(v) || !finite(c) || c <= 0.0) {
      throw DomainError("varactor C-V table values must be finite and positive");
    }
    if (i > 0) {
      if (v <= cv_table[i - 1].first) {
        throw DomainError("varactor C-V voltages must be strictly ascending");
      }
      if (c >= cv_table[i - 1].second) {
        throw DomainError("varactor C-V capacitances must be strictly decreasing");
      }
    }
  }
  auto close = [](double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
  };
  if (!close(cv_table.front().first, v_at_cmax) || !close(cv_table.front().second, c_max) ||
      !close(cv_table.back().first, v_at_cmin) || !close(cv_table.back().second, c_min)) {
    throw DomainError("varactor C-V table endpoints disagree with (v, c) limits");
  }
}

void UnitCellModel::validate() const {
  table.validate();
  varactor.validate();
  if (!finite(z_free_space) || z_free_space <= 0.0) {
    throw DomainError("free-space impedance must be positive");
  }
}

std::complex<double> impedance(double angle, double freq, double cap,
                               const CircuitParams& params) {
  params.validate();
  if (!finite(angle)) {
    throw DomainError("impedance: angle must be finite");
  }
  if (!finite(freq) || freq <= 0.0) {
    throw DomainError("impedance: frequency must be positive");
  }
  if (!finite(cap) || cap <= 0.0) {
    throw DomainError("impedance: capacitance must be positive");
  }
  // Plain-frequency convention: reactances are f*L and 1/(f*C), no 2*pi.
  const std::complex<double> bottom(0.0, freq * params.l_bottom);
  const std::complex<double> series(
      params.r_top,
      freq * params.l_top - 1.0 / (freq * params.c_top) - 1.0 / (freq * cap));
  const std::complex<double> den = bottom + series;
  if (std::abs(den) < std::numeric_limits<double>::min()) {
    throw ResonanceSingularityError("impedance: parallel-resonance denominator underflow");
  }
  return bottom * series / den;
}

std::complex<double> reflection_from_impedance(std::complex<double> z, double z0) {
  if (!finite(z0) || z0 <= 0.0) {
    throw DomainError("reference impedance must be positive");
  }
  return (z - z0) / (z + z0);
}

std::complex<double> reflection_coefficient(double angle, double freq, double cap,
                                            const UnitCellModel& model, InterpMode mode) {
  if (!finite(model.z_free_space) || model.z_free_space <= 0.0) {
    throw DomainError("free-space impedance must be positive");
  }
  const CircuitParams params = interpolate_params(model.table, angle, mode);
  return reflection_from_impedance(impedance(angle, freq, cap, params),
                                   model.z_free_space);
}

double resonance_frequency(const CircuitParams& params, double cap) {
  params.validate();
  if (!finite(cap) || cap <= 0.0) {
    throw DomainError("resonance_frequency: capacitance must be positive");
  }
  const double c_eq = params.c_top * cap / (params.c_top + cap);
  return 1.0 / std::sqrt((params.l_bottom + params.l_top) * c_eq);
}

CircuitParams interpolate_params(const CalibrationTable& table, double angle,
                                 InterpMode mode) {
  table.validate();
  if (!finite(angle)) {
    throw DomainError("interpolate_params: angle must be finite");
  }
  const double a = std::abs(angle);  // unit cell is symmetric about broadside
  const auto& e = table.entries;
  // Exact knot hits return the stored row untouched so calibration data
  // survives lookup bit-for-bit.
  for (const CalibrationEntry& k : e) {
    if (a == k.angle) return k.params;
  }
  if (a < e.front().angle || a > e.back().angle) {
    if (mode == InterpMode::strict) {
      throw CalibrationRangeError("angle outside calibration span in strict mode");
    }
    return a < e.front().angle ? e.front().params : e.back().params;
  }
  std::size_t hi = 1;
  while (e[hi].angle < a) ++hi;
  const CalibrationEntry& k0 = e[hi - 1];
  const CalibrationEntry& k1 = e[hi];
  const double t = (a - k0.angle) / (k1.angle - k0.angle);
  return CircuitParams{
      .l_bottom = std::lerp(k0.params.l_bottom, k1.params.l_bottom, t),
      .l_top = std::lerp(k0.params.l_top, k1.params.l_top, t),
      .r_top = std::lerp(k0.params.r_top, k1.params.r_top, t),
      .c_top = std::lerp(k0.params.c_top, k1.params.c_top, t),
  };
}

double capacitance_from_voltage(const VaractorModel& varactor, double v) {
  varactor.validate();
  if (!finite(v)) {
    throw DomainError("capacitance_from_voltage: voltage must be finite");
  }
  if (!varactor.cv_table.empty()) {
    const auto& t = varactor.cv_table;
    if (v < t.front().first || v > t.back().first) {
      throw DomainError("voltage outside the C-V table span");
    }
    for (const auto& [tv, tc] : t) {
      if (v == tv) return tc;
    }
    std::size_t hi = 1;
    while (t[hi].first < v) ++hi;
    const double s = (v - t[hi - 1].first) / (t[hi].first - t[hi - 1].first);
    return std::lerp(t[hi - 1].second, t[hi].second, s);
  }
  if (v < varactor.v_at_cmax || v > varactor.v_at_cmin) {
    throw DomainError("voltage outside the varactor bias range");
  }
  const double m = std::log(varactor.c_max / varactor.c_min) /
                   std::log1p(varactor.v_at_cmin / kJunctionVoltage);
  return varactor.c_max / std::pow(1.0 + v / kJunctionVoltage, m);
}

}  // namespace risim
