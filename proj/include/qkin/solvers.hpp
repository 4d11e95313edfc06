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

#ifndef QKIN_SOLVERS_HPP
#define QKIN_SOLVERS_HPP

#include <map>
#include <string>
#include <vector>

#include "qkin/cumulants.hpp"
#include "qkin/model.hpp"

namespace qkin {

/// Truncation orders, finite-difference step, time grid, quadrature and
/// tolerance policy shared by all series evaluations.
struct SeriesConfig {
  int n_max = 4;
  double dt = 0.02;
  int duhamel_nodes = 32;
  std::vector<double> times;
  std::map<std::string, double> tolerances;
  bool norm_guard = true;

  void validate() const;
  double tolerance_or(const std::string& name, double fallback) const;
};

/// e^{-1}: convergence radius of the solution expansion in trace norm.
double series_admissibility_bound();
/// e^{-2}: existence radius for the marginal functionals (Proposition 1).
double functional_admissibility_bound();
/// x0: the root of e^{2x}(2x+1) = 2, approximately 0.18741.
double contraction_threshold();

struct ContractionConfig {
  int max_iters = 50;
  double fixed_point_tol = 1e-12;
  double threshold = contraction_threshold();

  void validate() const;
};

/// Marginal operators (F_1, ..., F_{s_max}) at one time point.
struct MarginalState {
  double time = 0.0;
  std::vector<ManyBodyOperator> marginals;  // index s-1 holds the s-particle marginal

  void validate() const;
};

/// Truncated solution expansion of the hierarchy for the s-particle marginal:
/// sum_n (1/n!) Tr_{s+1..s+n} of the reduced group cumulant applied to the
/// (s+n)-fold product of the initial one-particle operator.
ManyBodyOperator bbgky_marginal(const ModelSpec& m, int s, double t, const ManyBodyOperator& f1_init,
                                const SeriesConfig& cfg, Diagnostics* diag = nullptr);

/// The kinetic-equation solution expansion; identical to bbgky_marginal at
/// s = 1 (shared implementation).
ManyBodyOperator kinetic_solution(const ModelSpec& m, double t, const ManyBodyOperator& f1_init,
                                  const SeriesConfig& cfg, Diagnostics* diag = nullptr);

/// Marginal functional of the state: the V-operator series applied to
/// products of the one-particle operator at the same time.
ManyBodyOperator marginal_functional(const ModelSpec& m, int s, double t, const ManyBodyOperator& f1_t,
                                     const SeriesConfig& cfg);

/// Correlation functional: the same series with the cluster declusterized.
/// Vanishes for s >= 2 when the coupling or the time vanishes.
ManyBodyOperator correlation_functional(const ModelSpec& m, int s, double t, const ManyBodyOperator& f1_t,
                                        const SeriesConfig& cfg);

/// Correlation operator from marginals: the alternating partition sum over
/// embedded products of marginal operators.
ManyBodyOperator correlation_from_marginals(const MarginalState& state, int s);

/// Collision integral of the kinetic equation: the interaction commutator on
/// labels (1,2) applied to the two-particle marginal functional, traced over
/// label 2. Traceless to fp.
ManyBodyOperator collision_integral(const ModelSpec& m, double t, const ManyBodyOperator& f1_t,
                                    const SeriesConfig& cfg);

struct DerivativeReport {
  double t = 0.0;
  double dt = 0.0;
  int scheme_order = 2;     // 2 for central differences, 1 one-sided at t = 0
  double residual_dt = 0.0;
  double residual_half = 0.0;
  double ratio = 0.0;       // residual_dt / residual_half; ~4 in the dt^2 regime
};

/// Finite-difference check that the kinetic solution satisfies the kinetic
/// equation: d/dt F_1(t) vs -N_1 F_1(t) + collision integral.
DerivativeReport derivative_consistency(const ModelSpec& m, double t, const ManyBodyOperator& f1_init,
                                        const SeriesConfig& cfg);

struct InversionReport {
  std::vector<double> increments;  // ||f^(k) - f^(k-1)||_1 per iteration
  int iterations = 0;
  bool converged = false;
};

/// Recovers the initial datum from the one-particle operator at time t by
/// successive approximations of the nonlinear fixed-point mapping. Throws if
/// max_iters is exceeded without convergence; warns (never errors) when the
/// trace norm exceeds the contraction threshold.
ManyBodyOperator invert_initial_data(const ModelSpec& m, double t, const ManyBodyOperator& f1_t,
                                     const ContractionConfig& ccfg, const SeriesConfig& cfg,
                                     Diagnostics* diag = nullptr, InversionReport* report = nullptr);

/// Max-abs residual of the product identity: the (s+n)-fold product of the
/// kinetic solution against its dissection expansion over products of initial
/// data, with inner cumulant order capped at inner_order (cfg.n_max when
/// negative). Zero to fp at matched truncation.
double product_identity_residual(const ModelSpec& m, int s, int n, double t,
                                 const ManyBodyOperator& f1_init, const SeriesConfig& cfg,
                                 int inner_order = -1);

/// Tr a * state, with the 1/s! prefactor for s >= 2. The imaginary part must
/// be below 1e-12 and is discarded.
double observable_average(const ManyBodyOperator& a, const ManyBodyOperator& state);

/// Dispersion of an additive one-particle observable from F_1 and the
/// two-particle correlation functional.
double observable_dispersion(const ManyBodyOperator& a, const ManyBodyOperator& f1,
                             const ManyBodyOperator& g2);

struct EquivalenceRow {
  int n_max = 0;
  double residual = 0.0;  // trace norm of (hierarchy marginal - marginal functional)
};

/// For each truncation order: the trace-norm residual between the hierarchy
/// marginal and the marginal functional of the kinetic solution. The
/// computational content of the equivalence proposition.
std::vector<EquivalenceRow> equivalence_report(const ModelSpec& m, int s, double t,
                                               const ManyBodyOperator& f1_init,
                                               const std::vector<int>& n_max_list,
                                               Diagnostics* diag = nullptr);

}  // namespace qkin

#endif  // QKIN_SOLVERS_HPP
