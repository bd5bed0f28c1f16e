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

#include <stdexcept>
#include <string>

namespace risim {

// Base of every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument or data structure was violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Requested angle lies outside the calibration span in strict mode.
class CalibrationRangeError : public Error {
 public:
  using Error::Error;
};

// The parallel-circuit denominator underflowed (exact resonance pole).
class ResonanceSingularityError : public Error {
 public:
  using Error::Error;
};

// Target reflection phase is outside the tunable arc at this angle/frequency.
class InfeasiblePhaseError : public Error {
 public:
  using Error::Error;
};

// A capacitance bracket existed but no root met the phase tolerance.
class NonMonotonePhaseError : public Error {
 public:
  using Error::Error;
};

// More columns of a deflection design were infeasible than permitted.
class InfeasibleProfileError : public Error {
 public:
  using Error::Error;
};

// First-order reverse-angle expansion requested outside its validity range.
class UnstableExpansionError : public Error {
 public:
  using Error::Error;
};

// Run configuration is missing, malformed, or inconsistent.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Filesystem input/output failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace risim
