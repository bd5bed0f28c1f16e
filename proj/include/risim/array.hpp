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
#include <vector>

#include "risim/error.hpp"
#include "risim/units.hpp"

namespace risim {

// Column-array geometry of the surface. Columns share one bias line, so the
// steering model is one-dimensional; m_rows is informational.
struct RisGeometry {
  int n_columns = 0;       // N >= 2
  int m_rows = 1;          // M, informational
  double period_d = 0.0;   // column period, meters
  double freq = 0.0;       // carrier frequency, hertz

  void validate() const;   // throws DomainError

  double wavelength() const { return speed_of_light / freq; }

  // Phase advance between adjacent columns per unit sin(angle).
  double k_d() const { return two_pi * period_d / wavelength(); }

  // True when the period is short enough that no grating lobe can enter the
  // visible region for any scan angle.
  bool grating_lobe_free() const { return period_d / wavelength() < 0.5; }
};

// Per-column reflection settings. `capacitances` is empty until a design has
// been realized; a NaN entry marks a column whose target phase could not be
// reached.
struct ColumnProfile {
  std::vector<double> phases;        // radians, each in (-pi, pi]
  std::vector<double> amplitudes;    // each in [0, 1]
  std::vector<double> capacitances;  // farad; empty = not realized

  void validate() const;  // throws DomainError
};

// Profile with the given phases and unit amplitude everywhere.
ColumnProfile make_uniform_profile(std::vector<double> phases);

// Incident array response: element n (1-based) is e^{+j(n-1) k_d sin(angle)}.
std::vector<std::complex<double>> array_response_in(const RisGeometry& geom,
                                                    double angle);

// Reflected-direction response: e^{-j(n-1) k_d sin(angle)}.
std::vector<std::complex<double>> array_response_out(const RisGeometry& geom,
                                                     double angle);

// Apply the diagonal reflection matrix: y_n = A_n e^{j phi_n} a_in[n].
std::vector<std::complex<double>> reflect(const ColumnProfile& profile,
                                          const std::vector<std::complex<double>>& a_in);

}  // namespace risim
