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

#include "risim/array.hpp"

#include <cmath>

namespace risim {

namespace {

void check_incidence(double angle) {
  if (!std::isfinite(angle) || std::abs(angle) >= pi / 2.0) {
    throw DomainError("incidence angle must satisfy |angle| < pi/2");
  }
}

std::vector<std::complex<double>> response(const RisGeometry& geom, double angle,
                                           double sign) {
  geom.validate();
  check_incidence(angle);
  const double step = sign * geom.k_d() * std::sin(angle);
  std::vector<std::complex<double>> a(static_cast<std::size_t>(geom.n_columns));
  for (std::size_t n = 0; n < a.size(); ++n) {
    a[n] = std::polar(1.0, static_cast<double>(n) * step);
  }
  return a;
}

}  // namespace

void RisGeometry::validate() const {
  if (n_columns < 2) {
    throw DomainError("geometry needs at least two columns");
  }
  if (m_rows < 1) {
    throw DomainError("geometry needs at least one row");
  }
  if (!std::isfinite(period_d) || period_d <= 0.0) {
    throw DomainError("column period must be positive");
  }
  if (!std::isfinite(freq) || freq <= 0.0) {
    throw DomainError("carrier frequency must be positive");
  }
}

void ColumnProfile::validate() const {
  if (phases.size() < 2) {
    throw DomainError("profile needs at least two columns");
  }
  if (amplitudes.size() != phases.size()) {
    throw DomainError("profile amplitudes must match phases in length");
  }
  for (double p : phases) {
    if (!std::isfinite(p) || p <= -pi || p > pi) {
      throw DomainError("profile phases must lie in (-pi, pi]");
    }
  }
  for (double a : amplitudes) {
    if (!std::isfinite(a) || a < 0.0 || a > 1.0) {
      throw DomainError("profile amplitudes must lie in [0, 1]");
    }
  }
  if (!capacitances.empty() && capacitances.size() != phases.size()) {
    throw DomainError("profile capacitances must match phases in length");
  }
  for (double c : capacitances) {
    // NaN flags an unrealized column and is allowed.
    if (!std::isnan(c) && !(std::isfinite(c) && c > 0.0)) {
      throw DomainError("profile capacitances must be positive or NaN");
    }
  }
}

ColumnProfile make_uniform_profile(std::vector<double> phases) {
  ColumnProfile p;
  p.amplitudes.assign(phases.size(), 1.0);
  p.phases = std::move(phases);
  return p;
}

std::vector<std::complex<double>> array_response_in(const RisGeometry& geom,
                                                    double angle) {
  return response(geom, angle, +1.0);
}

std::vector<std::complex<double>> array_response_out(const RisGeometry& geom,
                                                     double angle) {
  return response(geom, angle, -1.0);
}

std::vector<std::complex<double>> reflect(const ColumnProfile& profile,
                                          const std::vector<std::complex<double>>& a_in) {
  profile.validate();
  if (a_in.size() != profile.phases.size()) {
    throw DomainError("reflect: profile and response lengths differ");
  }
  std::vector<std::complex<double>> y(a_in.size());
  for (std::size_t n = 0; n < a_in.size(); ++n) {
    y[n] = std::polar(profile.amplitudes[n], profile.phases[n]) * a_in[n];
  }
  return y;
}

}  // namespace risim
