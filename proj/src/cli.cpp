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

#include "risim/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "risim/pattern.hpp"
#include "risim/reciprocity.hpp"
#include "risim/steering.hpp"

namespace risim {

namespace {

namespace fs = std::filesystem;

constexpr double kDbFloor = 1e-300;  // clamps log10 at exact pattern nulls

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

// Flat `key = value` file with '#' comments. Duplicate keys are rejected so
// silently shadowed settings cannot happen.
std::map<std::string, std::string> read_key_values(const fs::path& path) {
  std::string content;
  try {
    content = read_text_file(path);
  } catch (const IoError& e) {
    throw ConfigError(e.what());
  }
  std::map<std::string, std::string> kv;
  std::istringstream stream(content);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string_view stripped = trim(line);
    if (stripped.empty()) continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(path.string() + ":" + std::to_string(line_no) +
                        ": expected 'key = value'");
    }
    const std::string key{trim(stripped.substr(0, eq))};
    const std::string value{trim(stripped.substr(eq + 1))};
    if (key.empty()) {
      throw ConfigError(path.string() + ":" + std::to_string(line_no) +
                        ": empty key");
    }
    if (!kv.emplace(key, value).second) {
      throw ConfigError(path.string() + ": duplicate key '" + key + "'");
    }
  }
  return kv;
}

// Typed access to the key-value map that tracks which keys were consumed, so
// typos surface as unknown-key errors instead of silently applied defaults.
class ConfigReader {
 public:
  ConfigReader(std::map<std::string, std::string> kv, fs::path path)
      : kv_(std::move(kv)), path_(std::move(path)) {}

  bool has(const std::string& key) {
    used_.insert(key);
    return kv_.contains(key);
  }

  std::string get_string(const std::string& key, std::string fallback) {
    used_.insert(key);
    const auto it = kv_.find(key);
    return it == kv_.end() ? fallback : it->second;
  }

  double get_double(const std::string& key, double fallback) {
    used_.insert(key);
    const auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    return parse(key, it->second);
  }

  int get_int(const std::string& key, int fallback) {
    const double v = get_double(key, static_cast<double>(fallback));
    const int i = static_cast<int>(v);
    if (static_cast<double>(i) != v) {
      throw ConfigError(path_.string() + ": key '" + key + "' must be an integer");
    }
    return i;
  }

  std::vector<double> get_list(const std::string& key, std::vector<double> fallback) {
    used_.insert(key);
    const auto it = kv_.find(key);
    if (it == kv_.end()) return fallback;
    std::vector<double> values;
    std::string_view rest = it->second;
    if (trim(rest).empty()) return values;
    while (true) {
      const std::size_t comma = rest.find(',');
      values.push_back(parse(key, std::string(trim(rest.substr(0, comma)))));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    return values;
  }

  void finish() const {
    for (const auto& [key, value] : kv_) {
      if (!used_.contains(key)) {
        throw ConfigError(path_.string() + ": unknown config key '" + key + "'");
      }
    }
  }

 private:
  double parse(const std::string& key, const std::string& text) const {
    try {
      return parse_double(text);
    } catch (const DomainError&) {
      throw ConfigError(path_.string() + ": key '" + key +
                        "' has a non-numeric value '" + text + "'");
    }
  }

  std::map<std::string, std::string> kv_;
  fs::path path_;
  std::set<std::string> used_;
};

fs::path resolve_against(const fs::path& base_dir, const fs::path& p) {
  return p.is_absolute() ? p : base_dir / p;
}

fs::path ensure_out_dir(const RunConfig& cfg) {
  std::error_code ec;
  fs::create_directories(cfg.out_dir, ec);
  if (ec || !fs::is_directory(cfg.out_dir)) {
    throw IoError("cannot create output directory: " + cfg.out_dir.string());
  }
  return cfg.out_dir;
}

std::string db_value(double power) {
  return format_double(10.0 * std::log10(std::max(power, kDbFloor)));
}

void check_angle_deg_range(double angle, const char* key) {
  if (!std::isfinite(angle) || std::abs(angle) >= pi / 2.0) {
    throw ConfigError(std::string("config angle '") + key +
                      "' must satisfy |angle| < 90 degrees");
  }
}

}  // namespace

void RunConfig::validate() const {
  if (calibration.empty()) {
    throw ConfigError("config needs a calibration file (key 'calibration')");
  }
  if (!fs::exists(calibration)) {
    throw ConfigError("calibration file does not exist: " + calibration.string());
  }
  if (!varactor.empty() && !fs::exists(varactor)) {
    throw ConfigError("varactor file does not exist: " + varactor.string());
  }
  if (n_columns < 2) throw ConfigError("n_columns must be at least 2");
  if (m_rows < 1) throw ConfigError("m_rows must be at least 1");
  if (!(period_d > 0.0)) throw ConfigError("period_d_mm must be positive");
  if (!(freq > 0.0)) throw ConfigError("freq_GHz must be positive");
  if (!(z0 > 0.0)) throw ConfigError("z0_ohm must be positive");
  if (!(0.0 < c_min && c_min < c_max)) {
    throw ConfigError("varactor limits need 0 < c_min_pF < c_max_pF");
  }
  if (!(v_at_cmax < v_at_cmin)) {
    throw ConfigError("varactor limits need v_at_cmax_V < v_at_cmin_V");
  }
  if (!(freq_step > 0.0) || freq_stop < freq_start || !(freq_start > 0.0)) {
    throw ConfigError("frequency sweep range is empty or its step is not positive");
  }
  for (double a : sweep_angles) check_angle_deg_range(a, "sweep_angles_deg");
  for (double c : capacitances) {
    if (!(c > 0.0)) throw ConfigError("capacitances_pF must be positive");
  }
  if (!(angle_step > 0.0) || angle_stop < angle_start) {
    throw ConfigError("angle sweep range is empty or its step is not positive");
  }
  if (angle_start < 0.0) {
    throw ConfigError("angle_start_deg must be non-negative");
  }
  check_angle_deg_range(angle_stop, "angle_stop_deg");
  if (!(obs_step > 0.0) || obs_step >= pi / 2.0) {
    throw ConfigError("obs_step_deg must be in (0, 90)");
  }
  if (!(theta1_step > 0.0) || theta1_stop < theta1_start || !(theta2_step > 0.0) ||
      theta2_stop < theta2_start) {
    throw ConfigError("reciprocity grid is empty or its step is not positive");
  }
  check_angle_deg_range(theta1_start, "theta1_start_deg");
  check_angle_deg_range(theta1_stop, "theta1_stop_deg");
  check_angle_deg_range(theta2_start, "theta2_start_deg");
  check_angle_deg_range(theta2_stop, "theta2_stop_deg");
  if (!std::isfinite(window_threshold) || window_threshold < 0.0) {
    throw ConfigError("window_threshold_deg must be non-negative");
  }
}

RunConfig load_config(const fs::path& path) {
  ConfigReader reader(read_key_values(path), path);
  const fs::path base_dir = path.has_parent_path() ? path.parent_path() : ".";
  RunConfig cfg;

  const std::string calibration = reader.get_string("calibration", "");
  if (!calibration.empty()) {
    cfg.calibration = resolve_against(base_dir, calibration);
  }
  const std::string varactor = reader.get_string("varactor", "");
  if (!varactor.empty()) {
    cfg.varactor = resolve_against(base_dir, varactor);
  }
  cfg.out_dir = fs::path(reader.get_string("out_dir", cfg.out_dir.string()));

  cfg.n_columns = reader.get_int("n_columns", cfg.n_columns);
  cfg.m_rows = reader.get_int("m_rows", cfg.m_rows);
  cfg.period_d = reader.get_double("period_d_mm", cfg.period_d * 1e3) * 1e-3;
  cfg.freq = reader.get_double("freq_GHz", cfg.freq / 1e9) * 1e9;
  cfg.z0 = reader.get_double("z0_ohm", cfg.z0);

  const std::string mode = reader.get_string("interpolation", "clamp");
  if (mode == "clamp") {
    cfg.mode = InterpMode::clamp;
  } else if (mode == "strict") {
    cfg.mode = InterpMode::strict;
  } else {
    throw ConfigError(path.string() + ": interpolation must be 'clamp' or 'strict'");
  }

  cfg.c_min = reader.get_double("c_min_pF", cfg.c_min * 1e12) * 1e-12;
  cfg.c_max = reader.get_double("c_max_pF", cfg.c_max * 1e12) * 1e-12;
  cfg.v_at_cmin = reader.get_double("v_at_cmin_V", cfg.v_at_cmin);
  cfg.v_at_cmax = reader.get_double("v_at_cmax_V", cfg.v_at_cmax);

  cfg.freq_start = reader.get_double("freq_start_GHz", cfg.freq_start / 1e9) * 1e9;
  cfg.freq_stop = reader.get_double("freq_stop_GHz", cfg.freq_stop / 1e9) * 1e9;
  cfg.freq_step = reader.get_double("freq_step_GHz", cfg.freq_step / 1e9) * 1e9;

  std::vector<double> sweep_deg;
  sweep_deg.reserve(cfg.sweep_angles.size());
  for (double a : cfg.sweep_angles) sweep_deg.push_back(rad2deg(a));
  cfg.sweep_angles.clear();
  for (double a : reader.get_list("sweep_angles_deg", sweep_deg)) {
    cfg.sweep_angles.push_back(deg2rad(a));
  }

  std::vector<double> caps_pf;
  caps_pf.reserve(cfg.capacitances.size());
  for (double c : cfg.capacitances) caps_pf.push_back(c * 1e12);
  cfg.capacitances.clear();
  for (double c : reader.get_list("capacitances_pF", caps_pf)) {
    cfg.capacitances.push_back(c * 1e-12);
  }

  cfg.angle_start = deg2rad(reader.get_double("angle_start_deg", rad2deg(cfg.angle_start)));
  cfg.angle_stop = deg2rad(reader.get_double("angle_stop_deg", rad2deg(cfg.angle_stop)));
  cfg.angle_step = deg2rad(reader.get_double("angle_step_deg", rad2deg(cfg.angle_step)));
  cfg.obs_step = deg2rad(reader.get_double("obs_step_deg", rad2deg(cfg.obs_step)));

  cfg.theta1_start = deg2rad(reader.get_double("theta1_start_deg", rad2deg(cfg.theta1_start)));
  cfg.theta1_stop = deg2rad(reader.get_double("theta1_stop_deg", rad2deg(cfg.theta1_stop)));
  cfg.theta1_step = deg2rad(reader.get_double("theta1_step_deg", rad2deg(cfg.theta1_step)));
  cfg.theta2_start = deg2rad(reader.get_double("theta2_start_deg", rad2deg(cfg.theta2_start)));
  cfg.theta2_stop = deg2rad(reader.get_double("theta2_stop_deg", rad2deg(cfg.theta2_stop)));
  cfg.theta2_step = deg2rad(reader.get_double("theta2_step_deg", rad2deg(cfg.theta2_step)));
  cfg.window_threshold =
      deg2rad(reader.get_double("window_threshold_deg", rad2deg(cfg.window_threshold)));

  reader.finish();
  return cfg;
}

UnitCellModel build_model(const RunConfig& config) {
  UnitCellModel model;
  try {
    model.table = read_calibration_csv(config.calibration);
    if (!config.varactor.empty()) {
      const auto curve = read_varactor_csv(config.varactor);
      if (curve.size() < 2) {
        throw DomainError("varactor C-V file needs at least two rows");
      }
      model.varactor.cv_table = curve;
      model.varactor.v_at_cmax = curve.front().first;
      model.varactor.c_max = curve.front().second;
      model.varactor.v_at_cmin = curve.back().first;
      model.varactor.c_min = curve.back().second;
    } else {
      model.varactor.c_min = config.c_min;
      model.varactor.c_max = config.c_max;
      model.varactor.v_at_cmin = config.v_at_cmin;
      model.varactor.v_at_cmax = config.v_at_cmax;
    }
    model.z_free_space = config.z0;
    model.metadata.period_d = config.period_d;
    model.validate();
  } catch (const IoError& e) {
    throw ConfigError(e.what());
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  return model;
}

RisGeometry geometry_from(const RunConfig& config) {
  return RisGeometry{.n_columns = config.n_columns,
                     .m_rows = config.m_rows,
                     .period_d = config.period_d,
                     .freq = config.freq};
}

std::vector<double> theta1_grid_from(const RunConfig& config) {
  return linear_grid(config.theta1_start, config.theta1_stop, config.theta1_step);
}

std::vector<double> theta2_grid_from(const RunConfig& config) {
  return linear_grid(config.theta2_start, config.theta2_stop, config.theta2_step);
}

int cmd_sweep_frequency(const RunConfig& config) {
  if (config.sweep_angles.empty()) {
    throw ConfigError("sweep-freq needs a non-empty sweep_angles_deg list");
  }
  if (config.capacitances.empty()) {
    throw ConfigError("sweep-freq needs a non-empty capacitances_pF list");
  }
  const UnitCellModel model = build_model(config);
  const std::vector<double> freqs =
      linear_grid(config.freq_start, config.freq_stop, config.freq_step);
  const fs::path dir = ensure_out_dir(config);
  for (double angle : config.sweep_angles) {
    for (double cap : config.capacitances) {
      std::string body = "freq_GHz,phase_deg,amplitude\n";
      for (double f : freqs) {
        const std::complex<double> gamma =
            reflection_coefficient(angle, f, cap, model, config.mode);
        body += format_double(f / 1e9) + ',' +
                format_double(rad2deg(std::arg(gamma))) + ',' +
                format_double(std::abs(gamma)) + '\n';
      }
      const std::string name = "phase_vs_freq_" + format_double(rad2deg(angle)) +
                               "_" + format_double(cap * 1e12) + ".csv";
      write_text_file(dir / name, body);
    }
  }
  return 0;
}

int cmd_sweep_angle(const RunConfig& config) {
  if (config.capacitances.empty()) {
    throw ConfigError("sweep-angle needs a non-empty capacitances_pF list");
  }
  const UnitCellModel model = build_model(config);
  const std::vector<double> angles =
      linear_grid(config.angle_start, config.angle_stop, config.angle_step);
  const fs::path dir = ensure_out_dir(config);
  for (double cap : config.capacitances) {
    std::string body = "angle_deg,phase_deg,amplitude\n";
    for (double angle : angles) {
      const std::complex<double> gamma =
          reflection_coefficient(angle, config.freq, cap, model, config.mode);
      body += format_double(rad2deg(angle)) + ',' +
              format_double(rad2deg(std::arg(gamma))) + ',' +
              format_double(std::abs(gamma)) + '\n';
    }
    write_text_file(dir / ("phase_vs_angle_" + format_double(cap * 1e12) + ".csv"),
                    body);
  }
  std::string ranges = "angle_deg,phase_lo_deg,phase_hi_deg,width_deg\n";
  for (double angle : angles) {
    const PhaseRange range =
        tunable_phase_range(model, angle, config.freq, config.mode);
    ranges += format_double(rad2deg(angle)) + ',' + format_double(rad2deg(range.lo)) +
              ',' + format_double(rad2deg(range.hi)) + ',' +
              format_double(rad2deg(range.width)) + '\n';
  }
  write_text_file(dir / "tunable_range_vs_angle.csv", ranges);
  return 0;
}

namespace {

void write_profile_csv(const fs::path& file, const DeflectionDesign& realized) {
  std::string body = "column,phase_rad,capacitance_pF,feasible\n";
  for (std::size_t i = 0; i < realized.profile.phases.size(); ++i) {
    const double cap = realized.profile.capacitances[i];
    body += std::to_string(i + 1) + ',' + format_double(realized.profile.phases[i]) +
            ',' + (std::isnan(cap) ? "nan" : format_double(cap * 1e12)) + ',' +
            (realized.feasible_per_column[i] ? "1" : "0") + '\n';
  }
  write_text_file(file, body);
}

void write_cut_csv(const fs::path& file, const FarFieldCut& cut) {
  std::string body = "theta_obs_deg,power_db\n";
  for (std::size_t i = 0; i < cut.angles.size(); ++i) {
    body += format_double(rad2deg(cut.angles[i])) + ',' + db_value(cut.power[i]) +
            '\n';
  }
  write_text_file(file, body);
}

}  // namespace

int cmd_design(const RunConfig& config, double theta_in, double theta_out) {
  const UnitCellModel model = build_model(config);
  const RisGeometry geom = geometry_from(config);
  const DeflectionDesign design = design_deflection(geom, theta_in, theta_out);
  // Realize with no failure cap: infeasible columns are reported in the
  // profile CSV and through the exit code instead of an exception.
  const DeflectionDesign realized =
      realize_profile(model, design, geom, config.mode, 1.0);
  const fs::path dir = ensure_out_dir(config);
  write_profile_csv(dir / "design_profile.csv", realized);
  const FarFieldCut cut =
      far_field_cut(realized.profile, geom, theta_in, config.obs_step);
  write_cut_csv(dir / "design_cut.csv", cut);
  const std::size_t feasible =
      static_cast<std::size_t>(std::count(realized.feasible_per_column.begin(),
                                          realized.feasible_per_column.end(), true));
  std::printf("delta_phi_rad = %s\n", format_double(realized.delta_phi).c_str());
  std::printf("peak_angle_deg = %s\n", format_double(rad2deg(cut.peak_angle)).c_str());
  std::printf("feasible_columns = %zu/%zu\n", feasible,
              realized.profile.phases.size());
  if (cut.ambiguous_peak) {
    std::fprintf(stderr, "warning: far-field peak is ambiguous\n");
  }
  return feasible == realized.profile.phases.size() ? 0 : 3;
}

int cmd_reciprocity(const RunConfig& config, const std::vector<double>& theta1_grid,
                    const std::vector<double>& theta2_grid) {
  const UnitCellModel model = build_model(config);
  const RisGeometry geom = geometry_from(config);
  const ReciprocityScan scan =
      reciprocity_scan(model, geom, theta1_grid, theta2_grid, config.mode);
  const fs::path dir = ensure_out_dir(config);
  std::string body =
      "theta1_deg,theta2_deg,delta_phi1_rad,delta_phi2_rad,delta_rad,"
      "theta3_deg,deviation_deg,evanescent,dispersion_rad\n";
  for (const ReciprocityReport& cell : scan.cells) {
    body += format_double(rad2deg(cell.theta1)) + ',' +
            format_double(rad2deg(cell.theta2)) + ',' +
            format_double(cell.delta_phi_1) + ',' +
            format_double(cell.delta_phi_2) + ',' + format_double(cell.delta) + ',' +
            format_double(rad2deg(cell.theta3_exact)) + ',' +
            format_double(rad2deg(cell.deviation)) + ',' +
            (cell.evanescent ? "1" : "0") + ',' + format_double(cell.dispersion) +
            '\n';
  }
  write_text_file(dir / "reciprocity_scan.csv", body);

  const double window = largest_square_window(scan, config.window_threshold);
  std::size_t passing = 0;
  for (const ReciprocityReport& cell : scan.cells) {
    if (cell.feasible && !cell.evanescent &&
        cell.deviation <= config.window_threshold) {
      ++passing;
    }
  }
  std::string summary = "window_deg,threshold_deg,cells_total,cells_passing\n";
  summary += (window < 0.0 ? std::string("-1") : format_double(rad2deg(window))) +
             ',' + format_double(rad2deg(config.window_threshold)) + ',' +
             std::to_string(scan.cells.size()) + ',' + std::to_string(passing) +
             '\n';
  write_text_file(dir / "reciprocity_window.csv", summary);
  std::printf("window_deg = %s\n",
              window < 0.0 ? "-1" : format_double(rad2deg(window)).c_str());
  return 0;
}

int cmd_pattern(const RunConfig& config, double theta_in, double theta_out) {
  build_model(config);  // validates the referenced calibration even though the
                        // target-phase cut needs only the geometry
  const RisGeometry geom = geometry_from(config);
  const DeflectionDesign design = design_deflection(geom, theta_in, theta_out);
  const FarFieldCut cut =
      far_field_cut(design.profile, geom, theta_in, config.obs_step);
  const fs::path dir = ensure_out_dir(config);
  write_cut_csv(dir / "farfield_cut.csv", cut);
  std::printf("peak_angle_deg = %s\n", format_double(rad2deg(cut.peak_angle)).c_str());
  if (cut.ambiguous_peak) {
    std::fprintf(stderr, "warning: far-field peak is ambiguous\n");
  }
  return 0;
}

}  // namespace risim
