// Copyright 2026 The quantumkinetics authors
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

#ifndef QKIN_TYPES_HPP
#define QKIN_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace qkin {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

// max-abs tolerance for hermiticity checks throughout
inline constexpr double kHermitianTol = 1e-12;

// d^s with overflow guard; label spaces stay desk-sized by construction
std::int64_t pow_int(int base, int exponent);

/// Collects non-fatal warnings (admissibility bounds, contraction guards).
/// Warnings never change results or exit codes.
struct Diagnostics {
  std::vector<std::string> warnings;
  void warn(std::string message) { warnings.push_back(std::move(message)); }
};

inline void warn_to(Diagnostics* diag, std::string message) {
  if (diag != nullptr) diag->warn(std::move(message));
}

}  // namespace qkin

#endif  // QKIN_TYPES_HPP
