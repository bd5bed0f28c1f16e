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

#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "risim/circuit.hpp"

namespace risim {

// Locale-independent shortest decimal form with 9 significant digits. Every
// number this library emits goes through here so repeated runs are
// byte-identical.
std::string format_double(double v);

// Locale-independent full-string parse; throws DomainError on trailing
// garbage or empty input.
double parse_double(std::string_view text);

// Inclusive number of points of the grid start, start+step, ..., stop.
// Tolerates sub-1e-9 rounding drift in (stop - start) / step.
int grid_count(double start, double stop, double step);

// The grid itself, built by integer index so the spacing never accumulates
// rounding error.
std::vector<double> linear_grid(double start, double stop, double step);

// Whole-file reads and writes in binary mode ('\n' survives on every
// platform). Throw IoError.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

// Generic numeric CSV (header line plus all-double rows).
struct NumericCsv {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};
NumericCsv read_numeric_csv(const std::filesystem::path& path);

// Calibration knots: CSV `angle_deg,L_B_nH,L_T_nH,R_T_ohm,C_T_pF`, angles
// ascending. Values convert to SI on ingestion.
CalibrationTable read_calibration_csv(const std::filesystem::path& path);
void write_calibration_csv(const std::filesystem::path& path,
                           const CalibrationTable& table);

// Measured varactor curve: CSV `voltage_V,capacitance_pF`, voltage
// ascending. Returned as (volt, farad) pairs.
std::vector<std::pair<double, double>> read_varactor_csv(
    const std::filesystem::path& path);

}  // namespace risim
