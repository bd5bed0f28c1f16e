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
#include <vector>

#include "risim/array.hpp"
#include "risim/circuit.hpp"
#include "risim/io.hpp"

namespace risim {

// Parsed run configuration. Loaded from a flat `key = value` file; angles
// arrive in degrees and capacitances in pF at the file boundary and are
// stored here in SI (radians, farad, hertz, meters).
struct RunConfig {
  std::filesystem::path calibration;  // required; resolved against config dir
  std::filesystem::path varactor;     // optional measured C-V curve
  std::filesystem::path out_dir = "out";

  int n_columns = 8;
  int m_rows = 1;
  double period_d = 8.0e-3;  // meters
  double freq = 5.195e9;     // hertz, operating frequency
  double z0 = free_space_impedance;
  InterpMode mode = InterpMode::clamp;

  // Varactor limits used when no C-V file is given.
  double c_min = 0.63e-12;
  double c_max = 2.67e-12;
  double v_at_cmin = 30.0;
  double v_at_cmax = 0.0;

  // Frequency sweep (sweep-freq).
  double freq_start = 4.0e9;
  double freq_stop = 7.0e9;
  double freq_step = 50.0e6;
  std::vector<double> sweep_angles{0.0, deg2rad(30.0), deg2rad(40.0)};
  std::vector<double> capacitances{0.63e-12, 1.14e-12, 2.67e-12};

  // Incidence-angle sweep (sweep-angle).
  double angle_start = 0.0;
  double angle_stop = deg2rad(89.0);
  double angle_step = deg2rad(1.0);

  // Far-field cut sampling (design, pattern).
  double obs_step = deg2rad(0.1);

  // Reciprocity scan grid and window threshold (reciprocity).
  double theta1_start = deg2rad(-10.0);
  double theta1_stop = deg2rad(10.0);
  double theta1_step = deg2rad(2.5);
  double theta2_start = deg2rad(-10.0);
  double theta2_stop = deg2rad(10.0);
  double theta2_step = deg2rad(2.5);
  double window_threshold = deg2rad(1.0);

  void validate() const;  // throws ConfigError
};

// Parse a config file. Relative calibration/varactor paths are resolved
// against the config file's directory. Callers apply any command-line
// overrides and then validate().
RunConfig load_config(const std::filesystem::path& path);

// Assemble the unit-cell model from the files the config references. File
// problems surface as ConfigError (the config promised files that exist and
// parse).
UnitCellModel build_model(const RunConfig& config);

RisGeometry geometry_from(const RunConfig& config);

std::vector<double> theta1_grid_from(const RunConfig& config);
std::vector<double> theta2_grid_from(const RunConfig& config);

// Subcommand bodies. Each writes CSV files under config.out_dir and returns
// the process exit code (0 success, 3 infeasible design). Config and I/O
// problems are thrown (ConfigError, IoError).
int cmd_sweep_frequency(const RunConfig& config);
int cmd_sweep_angle(const RunConfig& config);
int cmd_design(const RunConfig& config, double theta_in, double theta_out);
int cmd_reciprocity(const RunConfig& config, const std::vector<double>& theta1_grid,
                    const std::vector<double>& theta2_grid);
int cmd_pattern(const RunConfig& config, double theta_in, double theta_out);

}  // namespace risim
