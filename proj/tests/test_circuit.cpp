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

#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "risim/circuit.hpp"
#include "test_support.hpp"

using namespace risim;
using namespace risim::testing;

TEST_CASE("lossless circuit impedance is purely imaginary") {
  CircuitParams p = row0();
  p.r_top = 0.0;
  const std::complex<double> z = impedance(0.0, 5.0e9, 1.0e-12, p);
  CHECK(z.real() == 0.0);
  CHECK(std::isfinite(z.imag()));
}

TEST_CASE("impedance peaks near the published resonance point") {
  // At the tabulated broadside resonance the parallel circuit presents an
  // impedance far above the free-space level.
  const std::complex<double> z = impedance(0.0, 5.53e9, 0.63e-12, row0());
  CHECK(std::abs(z) > 5.0 * free_space_impedance);
  CHECK(std::abs(z) == doctest::Approx(3381.56).epsilon(1e-3));
  CHECK(z.real() == doctest::Approx(3317.84).epsilon(1e-3));
  CHECK(z.imag() == doctest::Approx(-653.35).epsilon(2e-3));
}

TEST_CASE("impedance rejects non-positive frequency and capacitance") {
  CHECK_THROWS_AS(impedance(0.0, 0.0, 1e-12, row0()), DomainError);
  CHECK_THROWS_AS(impedance(0.0, -5e9, 1e-12, row0()), DomainError);
  CHECK_THROWS_AS(impedance(0.0, 5e9, 0.0, row0()), DomainError);
  CHECK_THROWS_AS(impedance(0.0, 5e9, -1e-12, row0()), DomainError);
}

TEST_CASE("impedance reports an exact parallel-resonance pole") {
  // Reactances are f*L - 1/(f*C_T) - 1/(f*C) = 1 - 1 - 1 = -1 for the series
  // branch and +1 for the bottom branch, so the lossless denominator is
  // exactly zero.
  const CircuitParams p{.l_bottom = 1.0, .l_top = 1.0, .r_top = 0.0, .c_top = 1.0};
  CHECK_THROWS_AS(impedance(0.0, 1.0, 1.0, p), ResonanceSingularityError);
}

TEST_CASE("circuit params validation") {
  CircuitParams p = row0();
  p.l_bottom = 0.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = row0();
  p.r_top = -1.0;
  CHECK_THROWS_AS(p.validate(), DomainError);
  p = row0();
  p.c_top = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(p.validate(), DomainError);
}

TEST_CASE("matched impedance reflects nothing") {
  const std::complex<double> gamma =
      reflection_from_impedance({free_space_impedance, 0.0}, free_space_impedance);
  CHECK(gamma == std::complex<double>(0.0, 0.0));
}

TEST_CASE("reflection at the published resonance point") {
  const UnitCellModel model = cell_model();
  const std::complex<double> gamma =
      reflection_coefficient(0.0, 5.53e9, 0.63e-12, model);
  // Phase approaches zero and amplitude its minimum near resonance.
  CHECK(std::abs(std::arg(gamma)) < deg2rad(5.0));
  CHECK(std::arg(gamma) == doctest::Approx(deg2rad(-2.4960)).epsilon(1e-2));
  CHECK(std::abs(gamma) == doctest::Approx(0.803009).epsilon(1e-4));
}

TEST_CASE("lossless cells reflect with unit magnitude") {
  std::mt19937 rng(7u);
  std::uniform_real_distribution<double> l_nh(1.0, 100.0);
  std::uniform_real_distribution<double> c_pf(0.1, 300.0);
  std::uniform_real_distribution<double> f_ghz(1.0, 10.0);
  for (int i = 0; i < 500; ++i) {
    const CircuitParams p{.l_bottom = l_nh(rng) * 1e-9,
                          .l_top = l_nh(rng) * 1e-9,
                          .r_top = 0.0,
                          .c_top = c_pf(rng) * 1e-12};
    std::complex<double> gamma;
    try {
      gamma = reflection_from_impedance(
          impedance(0.0, f_ghz(rng) * 1e9, c_pf(rng) * 1e-12, p),
          free_space_impedance);
    } catch (const ResonanceSingularityError&) {
      continue;  // random draw landed on the exact pole
    }
    CHECK(std::abs(std::abs(gamma) - 1.0) <= 1e-12);
  }
}

TEST_CASE("resonance frequencies of the published rows") {
  const double f0 = resonance_frequency(row0(), 0.63e-12);
  const double f30 = resonance_frequency(row30(), 0.63e-12);
  const double f40 = resonance_frequency(row40(), 0.63e-12);
  CHECK(f0 == doctest::Approx(5.53e9).epsilon(0.005));
  CHECK(f30 == doctest::Approx(5.59e9).epsilon(0.005));
  CHECK(f40 == doctest::Approx(5.64e9).epsilon(0.005));
  // Pinned values guard against regressions tighter than the published
  // rounding allows.
  CHECK(f0 == doctest::Approx(5.525457e9).epsilon(1e-5));
  CHECK(f30 == doctest::Approx(5.585507e9).epsilon(1e-5));
  CHECK(f40 == doctest::Approx(5.643229e9).epsilon(1e-5));
  // The resonance climbs with the incidence angle.
  CHECK(f0 < f30);
  CHECK(f30 < f40);
}

TEST_CASE("reflection phase crosses zero within 1% of the resonance frequency") {
  const UnitCellModel model = cell_model();
  const double angles[] = {0.0, deg2rad(30.0), deg2rad(40.0)};
  const CircuitParams rows[] = {row0(), row30(), row40()};
  for (int k = 0; k < 3; ++k) {
    const double fr = resonance_frequency(rows[k], 0.63e-12);
    double crossing = 0.0;
    double prev_phase = 0.0;
    // 1 MHz march across fr +- 2%.
    for (int i = 0;; ++i) {
      const double f = fr * 0.98 + i * 1e6;
      if (f > fr * 1.02) break;
      const double phase =
          std::arg(reflection_coefficient(angles[k], f, 0.63e-12, model));
      // A true zero crossing, not the +-pi wrap of the series resonance.
      if (i > 0 && std::signbit(phase) != std::signbit(prev_phase) &&
          std::abs(phase) + std::abs(prev_phase) < pi / 2.0) {
        crossing = f;
        break;
      }
      prev_phase = phase;
    }
    REQUIRE(crossing > 0.0);
    CHECK(std::abs(crossing - fr) / fr < 0.01);
  }
}

TEST_CASE("interpolation reproduces knots bit-for-bit") {
  const CalibrationTable table = calibration_table();
  for (const CalibrationEntry& e : table.entries) {
    const CircuitParams p = interpolate_params(table, e.angle, InterpMode::strict);
    CHECK(p.l_bottom == e.params.l_bottom);
    CHECK(p.l_top == e.params.l_top);
    CHECK(p.r_top == e.params.r_top);
    CHECK(p.c_top == e.params.c_top);
  }
}

TEST_CASE("interpolation mirrors negative angles") {
  const CalibrationTable table = calibration_table();
  const CircuitParams pos = interpolate_params(table, deg2rad(30.0));
  const CircuitParams neg = interpolate_params(table, deg2rad(-30.0));
  CHECK(pos.l_bottom == neg.l_bottom);
  CHECK(pos.l_top == neg.l_top);
  CHECK(pos.r_top == neg.r_top);
  CHECK(pos.c_top == neg.c_top);
}

TEST_CASE("interpolation midpoint between the first two knots") {
  const CircuitParams p = interpolate_params(calibration_table(), deg2rad(15.0));
  CHECK(p.l_bottom == doctest::Approx(15.695e-9).epsilon(1e-12));
  CHECK(p.l_top == doctest::Approx(38.59e-9).epsilon(1e-12));
  CHECK(p.r_top == doctest::Approx(2.215).epsilon(1e-12));
  CHECK(p.c_top == doctest::Approx(12.25e-12).epsilon(1e-12));
}

TEST_CASE("interpolation clamps or rejects beyond the last knot") {
  const CalibrationTable table = calibration_table();
  const CircuitParams clamped = interpolate_params(table, deg2rad(70.0));
  CHECK(clamped.l_bottom == row40().l_bottom);
  CHECK(clamped.c_top == row40().c_top);
  CHECK_THROWS_AS(interpolate_params(table, deg2rad(70.0), InterpMode::strict),
                  CalibrationRangeError);
}

TEST_CASE("single-knot tables serve every angle in clamp mode") {
  CalibrationTable table = calibration_table();
  table.entries = {{deg2rad(10.0), row30()}};
  for (double deg : {-80.0, 0.0, 10.0, 45.0, 89.0}) {
    const CircuitParams p = interpolate_params(table, deg2rad(deg));
    CHECK(p.l_top == row30().l_top);
  }
  CHECK_THROWS_AS(interpolate_params(table, 0.0, InterpMode::strict),
                  CalibrationRangeError);
}

TEST_CASE("calibration table validation") {
  CalibrationTable table;
  CHECK_THROWS_AS(table.validate(), DomainError);  // empty
  table = calibration_table();
  std::swap(table.entries[0], table.entries[1]);  // not ascending
  CHECK_THROWS_AS(table.validate(), DomainError);
  table = calibration_table();
  table.entries[1].angle = table.entries[0].angle;  // duplicate knot
  CHECK_THROWS_AS(table.validate(), DomainError);
  table = calibration_table();
  table.entries[2].angle = deg2rad(90.0);  // grazing incidence knot
  CHECK_THROWS_AS(table.validate(), DomainError);
}

TEST_CASE("junction law hits both published endpoints") {
  const VaractorModel v = varactor();
  CHECK(capacitance_from_voltage(v, 0.0) == v.c_max);  // (1 + 0)^m == 1 exactly
  CHECK(capacitance_from_voltage(v, 30.0) ==
        doctest::Approx(v.c_min).epsilon(1e-12));
  const double mid = capacitance_from_voltage(v, 10.0);
  CHECK(mid == doctest::Approx(0.942275892e-12).epsilon(1e-9));
  CHECK(mid > v.c_min);
  CHECK(mid < v.c_max);
}

TEST_CASE("junction law rejects out-of-range bias") {
  const VaractorModel v = varactor();
  CHECK_THROWS_AS(capacitance_from_voltage(v, -0.5), DomainError);
  CHECK_THROWS_AS(capacitance_from_voltage(v, 30.5), DomainError);
}

TEST_CASE("measured C-V table interpolates monotonically") {
  VaractorModel v = varactor();
  v.cv_table = {{0.0, 2.67e-12}, {10.0, 1.5e-12}, {30.0, 0.63e-12}};
  CHECK(capacitance_from_voltage(v, 10.0) == 1.5e-12);  // exact knot
  CHECK(capacitance_from_voltage(v, 5.0) ==
        doctest::Approx(0.5 * (2.67e-12 + 1.5e-12)).epsilon(1e-12));
  CHECK_THROWS_AS(capacitance_from_voltage(v, 31.0), DomainError);
}

TEST_CASE("varactor model validation") {
  VaractorModel v = varactor();
  v.c_min = v.c_max;
  CHECK_THROWS_AS(v.validate(), DomainError);
  v = varactor();
  v.cv_table = {{0.0, 2.67e-12}, {10.0, 2.8e-12}, {30.0, 0.63e-12}};  // bump
  CHECK_THROWS_AS(v.validate(), DomainError);
  v = varactor();
  v.cv_table = {{0.0, 2.5e-12}, {30.0, 0.63e-12}};  // endpoint mismatch
  CHECK_THROWS_AS(v.validate(), DomainError);
  v = varactor();
  v.cv_table = {{0.0, 2.67e-12}, {30.0, 0.63e-12}};  // consistent two-point table
  CHECK_NOTHROW(v.validate());
}

TEST_CASE("randomized passivity across the model path") {
  // Draw synthetic three-knot tables and query through interpolation so the
  // whole angle-resolution path is exercised.
  std::mt19937 rng(42u);
  std::uniform_real_distribution<double> l_nh(1.0, 100.0);
  std::uniform_real_distribution<double> r_ohm(0.0, 10.0);
  std::uniform_real_distribution<double> ct_pf(0.1, 300.0);
  std::uniform_real_distribution<double> c_pf(0.1, 10.0);
  std::uniform_real_distribution<double> f_ghz(1.0, 10.0);
  std::uniform_real_distribution<double> angle(-deg2rad(89.0), deg2rad(89.0));
  for (int i = 0; i < 1000; ++i) {
    UnitCellModel model = cell_model();
    model.table.entries.clear();
    for (double knot_deg : {0.0, 30.0, 60.0}) {
      model.table.entries.push_back(
          {deg2rad(knot_deg), CircuitParams{.l_bottom = l_nh(rng) * 1e-9,
                                            .l_top = l_nh(rng) * 1e-9,
                                            .r_top = r_ohm(rng),
                                            .c_top = ct_pf(rng) * 1e-12}});
    }
    const std::complex<double> gamma = reflection_coefficient(
        angle(rng), f_ghz(rng) * 1e9, c_pf(rng) * 1e-12, model);
    CHECK(std::abs(gamma) <= 1.0 + 1e-12);
  }
}
