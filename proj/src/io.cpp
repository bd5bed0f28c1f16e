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

#include "risim/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

namespace risim {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  while (true) {
    const std::size_t comma = line.find(',');
    fields.emplace_back(trim(line.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    line.remove_prefix(comma + 1);
  }
  return fields;
}

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  const std::string content = read_text_file(path);
  std::vector<std::string> lines;
  std::istringstream stream(content);
  std::string line;
  while (std::getline(stream, line)) {
    const std::string_view trimmed = trim(line);
    if (!trimmed.empty()) lines.emplace_back(trimmed);
  }
  if (lines.empty()) {
    throw DomainError("file has no content: " + path.string());
  }
  return lines;
}

void expect_header(const std::vector<std::string>& fields, std::string_view want,
                   const std::filesystem::path& path) {
  std::string have;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) have += ',';
    have += fields[i];
  }
  if (have != want) {
    throw DomainError("unexpected header in " + path.string() + ": got '" + have +
                      "', want '" + std::string(want) + "'");
  }
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [end, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 9);
  if (ec != std::errc()) {
    throw DomainError("format_double: conversion failed");
  }
  return std::string(buf, end);
}

double parse_double(std::string_view text) {
  text = trim(text);
  double value = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw DomainError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

int grid_count(double start, double stop, double step) {
  if (!std::isfinite(start) || !std::isfinite(stop) || !std::isfinite(step) ||
      step <= 0.0) {
    throw DomainError("grid step must be positive and finite");
  }
  if (stop < start) {
    throw DomainError("grid stop must not precede start");
  }
  return static_cast<int>(std::floor((stop - start) / step + 1e-9)) + 1;
}

std::vector<double> linear_grid(double start, double stop, double step) {
  const int n = grid_count(start, stop, step);
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    grid[static_cast<std::size_t>(i)] = start + i * step;
  }
  return grid;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open for reading: " + path.string());
  }
  std::string content((std::istreambuf_iterator<char>(in)),
                      std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw IoError("read failed: " + path.string());
  }
  return content;
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw IoError("cannot open for writing: " + path.string());
  }
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  out.flush();
  if (!out) {
    throw IoError("write failed: " + path.string());
  }
}

NumericCsv read_numeric_csv(const std::filesystem::path& path) {
  const std::vector<std::string> lines = read_lines(path);
  NumericCsv csv;
  csv.header = split_fields(lines.front());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::vector<std::string> fields = split_fields(lines[i]);
    if (fields.size() != csv.header.size()) {
      throw DomainError("row " + std::to_string(i) + " of " + path.string() +
                        " has " + std::to_string(fields.size()) + " fields, want " +
                        std::to_string(csv.header.size()));
    }
    std::vector<double> row(fields.size());
    for (std::size_t k = 0; k < fields.size(); ++k) {
      row[k] = parse_double(fields[k]);
    }
    csv.rows.push_back(std::move(row));
  }
  return csv;
}

CalibrationTable read_calibration_csv(const std::filesystem::path& path) {
  const std::vector<std::string> lines = read_lines(path);
  expect_header(split_fields(lines.front()), "angle_deg,L_B_nH,L_T_nH,R_T_ohm,C_T_pF",
                path);
  CalibrationTable table;
  table.provenance = path.filename().string();
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::vector<std::string> fields = split_fields(lines[i]);
    if (fields.size() != 5) {
      throw DomainError("calibration row " + std::to_string(i) + " in " +
                        path.string() + " needs 5 fields");
    }
    CalibrationEntry entry;
    entry.angle = deg2rad(parse_double(fields[0]));
    entry.params.l_bottom = parse_double(fields[1]) * 1e-9;
    entry.params.l_top = parse_double(fields[2]) * 1e-9;
    entry.params.r_top = parse_double(fields[3]);
    entry.params.c_top = parse_double(fields[4]) * 1e-12;
    table.entries.push_back(entry);
  }
  table.validate();
  return table;
}

void write_calibration_csv(const std::filesystem::path& path,
                           const CalibrationTable& table) {
  table.validate();
  std::string body = "angle_deg,L_B_nH,L_T_nH,R_T_ohm,C_T_pF\n";
  for (const CalibrationEntry& e : table.entries) {
    body += format_double(rad2deg(e.angle)) + ',';
    body += format_double(e.params.l_bottom * 1e9) + ',';
    body += format_double(e.params.l_top * 1e9) + ',';
    body += format_double(e.params.r_top) + ',';
    body += format_double(e.params.c_top * 1e12) + '\n';
  }
  write_text_file(path, body);
}

std::vector<std::pair<double, double>> read_varactor_csv(
    const std::filesystem::path& path) {
  const std::vector<std::string> lines = read_lines(path);
  expect_header(split_fields(lines.front()), "voltage_V,capacitance_pF", path);
  std::vector<std::pair<double, double>> curve;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const std::vector<std::string> fields = split_fields(lines[i]);
    if (fields.size() != 2) {
      throw DomainError("varactor row " + std::to_string(i) + " in " +
                        path.string() + " needs 2 fields");
    }
    curve.emplace_back(parse_double(fields[0]), parse_double(fields[1]) * 1e-12);
  }
  return curve;
}

}  // namespace risim
