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

#include <cstdio>
#include <exception>
#include <string>

#include <CLI11.hpp>

#include "risim/cli.hpp"
#include "risim/error.hpp"
#include "risim/units.hpp"

namespace {

// Exit codes: 0 success, 2 config error, 3 infeasible design, 4 I/O error.
int map_error(const std::exception& e) {
  std::fprintf(stderr, "error: %s\n", e.what());
  if (dynamic_cast<const risim::IoError*>(&e) != nullptr) return 4;
  if (dynamic_cast<const risim::InfeasiblePhaseError*>(&e) != nullptr ||
      dynamic_cast<const risim::NonMonotonePhaseError*>(&e) != nullptr ||
      dynamic_cast<const risim::InfeasibleProfileError*>(&e) != nullptr) {
    return 3;
  }
  if (dynamic_cast<const risim::Error*>(&e) != nullptr) return 2;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Angle-dependent phase-shifter simulator for varactor-based "
               "reconfigurable intelligent surfaces"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string calibration;
  bool strict_angles = false;
  app.add_option("--config", config_path, "Run configuration file")
      ->required()
      ->group("Global");
  app.add_option("--out", out_dir, "Output directory (overrides config out_dir)")
      ->group("Global");
  app.add_option("--calibration", calibration,
                 "Calibration CSV (overrides config calibration)")
      ->group("Global");
  app.add_flag("--strict-angles", strict_angles,
               "Error on angles outside the calibration span instead of clamping")
      ->group("Global");

  CLI::App* sweep_freq = app.add_subcommand(
      "sweep-freq", "Reflection phase/amplitude versus frequency per (angle, C)");
  CLI::App* sweep_angle = app.add_subcommand(
      "sweep-angle",
      "Reflection phase versus incidence angle per C, plus tunable-range widths");
  CLI::App* design = app.add_subcommand(
      "design", "Design a deflection profile and report its far-field peak");
  CLI::App* reciprocity = app.add_subcommand(
      "reciprocity", "Scan angle-reciprocity deviation over (theta1, theta2)");
  CLI::App* pattern = app.add_subcommand(
      "pattern", "Far-field cut of a deflection design's target phases");

  double theta_in_deg = 0.0;
  double theta_out_deg = 0.0;
  for (CLI::App* cmd : {design, pattern}) {
    cmd->add_option("--theta-in", theta_in_deg, "Incidence angle, degrees")
        ->required();
    cmd->add_option("--theta-out", theta_out_deg, "Deflection angle, degrees")
        ->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    risim::RunConfig cfg = risim::load_config(config_path);
    if (!out_dir.empty()) cfg.out_dir = out_dir;
    if (!calibration.empty()) cfg.calibration = calibration;
    if (strict_angles) cfg.mode = risim::InterpMode::strict;
    cfg.validate();

    if (sweep_freq->parsed()) return risim::cmd_sweep_frequency(cfg);
    if (sweep_angle->parsed()) return risim::cmd_sweep_angle(cfg);
    if (design->parsed()) {
      return risim::cmd_design(cfg, risim::deg2rad(theta_in_deg),
                               risim::deg2rad(theta_out_deg));
    }
    if (reciprocity->parsed()) {
      return risim::cmd_reciprocity(cfg, risim::theta1_grid_from(cfg),
                                    risim::theta2_grid_from(cfg));
    }
    if (pattern->parsed()) {
      return risim::cmd_pattern(cfg, risim::deg2rad(theta_in_deg),
                                risim::deg2rad(theta_out_deg));
    }
  } catch (const std::exception& e) {
    return map_error(e);
  }
  return 0;
}
