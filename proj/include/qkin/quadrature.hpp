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

#ifndef QKIN_QUADRATURE_HPP
#define QKIN_QUADRATURE_HPP

#include <utility>
#include <vector>

namespace qkin {

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1], nodes ascending (Newton on P_n).
QuadratureRule gauss_legendre(int n);

/// The rule mapped to [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

}  // namespace qkin

#endif  // QKIN_QUADRATURE_HPP
