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

#ifndef QKIN_SCALING_HPP
#define QKIN_SCALING_HPP

#include "qkin/solvers.hpp"

namespace qkin {

/// Mean-field sweep parameters: strictly decreasing couplings, the comparison
/// time, the iterated-series truncation and the per-dimension node count of
/// the simplex quadrature.
struct SweepSpec {
  std::vector<double> epsilons;
  double time = 0.25;
  int vlasov_order = 3;
  int quadrature_nodes = 8;

  void validate() const;
};

/// Right-hand side of the limiting kinetic equation: free commutator plus the
/// traced interaction on the product f1 x f1. The model's coupling is used as
/// given (pass coupling 1 for the limit dynamics).
ManyBodyOperator vlasov_rhs(const ModelSpec& m, const ManyBodyOperator& f1);

/// Iterated-integral solution of the limiting equation: time-ordered simplex
/// integrals of free propagators and interaction commutators, traced to one
/// particle, truncated at the given order. Gauss-Legendre per nesting level.
ManyBodyOperator vlasov_series(const ModelSpec& m, double t, const ManyBodyOperator& f1_init, int order,
                               int quadrature_nodes);

struct MeanfieldRow {
  double epsilon = 0.0;
  double delta = 0.0;  // || eps * F_1(t) - f_1(t) ||_1
  double ratio = 0.0;  // delta(eps_i) / delta(eps_{i+1}); 0 on the last row
};

/// For each coupling: rescaled kinetic solution with initial datum
/// f1_limit_init / eps against the limiting series. First-order convergence
/// shows as ratios near 2 under coupling halving.
std::vector<MeanfieldRow> meanfield_sweep(const ModelSpec& m_base, const SweepSpec& sweep,
                                          const ManyBodyOperator& f1_limit_init, const SeriesConfig& cfg,
                                          Diagnostics* diag = nullptr, int workers = 1);

struct ChaosRow {
  double epsilon = 0.0;
  double marginal_residual = 0.0;   // || eps^s F_s(t|F_1(t)) - prod f_1(t) ||_1
  double correlation_norm = 0.0;    // || eps^s G_s(t|F_1(t)) ||_1
};

/// Chaos-propagation diagnostics: rescaled s-particle functionals against the
/// product of limiting solutions, and the rescaled correlation norm.
std::vector<ChaosRow> chaos_check(const ModelSpec& m_base, const SweepSpec& sweep,
                                  const ManyBodyOperator& f1_limit_init, int s, const SeriesConfig& cfg,
                                  Diagnostics* diag = nullptr, int workers = 1);

}  // namespace qkin

#endif  // QKIN_SCALING_HPP
