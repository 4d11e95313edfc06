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

#include "qkin/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qkin/combinatorics.hpp"

namespace qkin {

namespace {

double factorial(int n) {
  double out = 1.0;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

std::vector<int> label_range(int first, int last) {
  std::vector<int> out;
  for (int p = first; p <= last; ++p) out.push_back(p);
  return out;
}

void check_one_particle(const ManyBodyOperator& f1, const char* where) {
  if (f1.particle_count() != 1)
    throw std::invalid_argument(std::string(where) + ": expected a one-particle operator");
}

void admissibility_warnings(const ManyBodyOperator& f1, const SeriesConfig& cfg, Diagnostics* diag) {
  if (!cfg.norm_guard || diag == nullptr) return;
  const double norm = trace_norm(f1);
  if (norm >= series_admissibility_bound()) {
    std::ostringstream os;
    os << "trace norm " << norm << " >= e^-1 = " << series_admissibility_bound()
       << ": outside the proven convergence radius of the solution expansion";
    diag->warn(os.str());
  } else if (norm >= functional_admissibility_bound()) {
    std::ostringstream os;
    os << "trace norm " << norm << " >= e^-2 = " << functional_admissibility_bound()
       << ": outside the proven existence radius of the marginal functionals";
    diag->warn(os.str());
  }
}

}  // namespace

void SeriesConfig::validate() const {
  if (n_max < 0) throw std::invalid_argument("SeriesConfig: n_max must be >= 0");
  if (dt <= 0.0) throw std::invalid_argument("SeriesConfig: dt must be positive");
  if (duhamel_nodes < 1) throw std::invalid_argument("SeriesConfig: duhamel_nodes must be >= 1");
}

double SeriesConfig::tolerance_or(const std::string& name, double fallback) const {
  auto it = tolerances.find(name);
  return it == tolerances.end() ? fallback : it->second;
}

double series_admissibility_bound() { return std::exp(-1.0); }
double functional_admissibility_bound() { return std::exp(-2.0); }

double contraction_threshold() {
  // root of e^{2x}(2x+1) = 2 by Newton, stored as computed, not as a literal
  double x = 0.2;
  for (int i = 0; i < 64; ++i) {
    const double e = std::exp(2.0 * x);
    const double fx = e * (2.0 * x + 1.0) - 2.0;
    const double dfx = e * (4.0 * x + 4.0);
    const double step = fx / dfx;
    x -= step;
    if (std::abs(step) < 1e-16) break;
  }
  return x;
}

void ContractionConfig::validate() const {
  if (max_iters < 1) throw std::invalid_argument("ContractionConfig: max_iters must be >= 1");
  if (fixed_point_tol <= 0.0) throw std::invalid_argument("ContractionConfig: fixed_point_tol must be positive");
  if (threshold <= 0.0) throw std::invalid_argument("ContractionConfig: threshold must be positive");
}

void MarginalState::validate() const {
  if (marginals.empty()) throw std::invalid_argument("MarginalState: no marginals");
  const int d = marginals.front().dim();
  for (std::size_t i = 0; i < marginals.size(); ++i) {
    if (marginals[i].particle_count() != static_cast<int>(i) + 1)
      throw std::invalid_argument("MarginalState: marginal at index s must have particle_count s");
    if (marginals[i].dim() != d) throw std::invalid_argument("MarginalState: mixed one-particle dimensions");
    if (!marginals[i].is_hermitian())
      throw std::invalid_argument("MarginalState: marginal is not hermitian within 1e-12");
  }
}

ManyBodyOperator bbgky_marginal(const ModelSpec& m, int s, double t, const ManyBodyOperator& f1_init,
                                const SeriesConfig& cfg, Diagnostics* diag) {
  check_one_particle(f1_init, "bbgky_marginal");
  if (s < 1) throw std::invalid_argument("bbgky_marginal: s must be >= 1");
  cfg.validate();
  admissibility_warnings(f1_init, cfg, diag);

  ManyBodyOperator out = ManyBodyOperator::zero(s, m.dim());
  for (int n = 0; n <= cfg.n_max; ++n) {
    ManyBodyOperator term =
        reduced_cumulant(m, t, ClusterArgument{s, n}, tensor_power(f1_init, s + n));
    if (n > 0) term = partial_trace(term, label_range(s + 1, s + n));
    out = out + (1.0 / factorial(n)) * term;
  }
  return out;
}

ManyBodyOperator kinetic_solution(const ModelSpec& m, double t, const ManyBodyOperator& f1_init,
                                  const SeriesConfig& cfg, Diagnostics* diag) {
  return bbgky_marginal(m, 1, t, f1_init, cfg, diag);
}

namespace {

ManyBodyOperator functional_series(const ModelSpec& m, int s, double t, const ManyBodyOperator& f1_t,
                                   const SeriesConfig& cfg, ClusterTreatment treatment) {
  ManyBodyOperator out = ManyBodyOperator::zero(s, m.dim());
  for (int n = 0; n <= cfg.n_max; ++n) {
    ManyBodyOperator term =
        v_operator_direct(m, t, ClusterArgument{s, n}, tensor_power(f1_t, s + n), treatment);
    if (n > 0) term = partial_trace(term, label_range(s + 1, s + n));
    out = out + (1.0 / factorial(n)) * term;
  }
  return out;
}

}  // namespace

ManyBodyOperator marginal_functional(const ModelSpec& m, int s, double t, const ManyBodyOperator& f1_t,
                                     const SeriesConfig& cfg) {
  check_one_particle(f1_t, "marginal_functional");
  if (s < 1) throw std::invalid_argument("marginal_functional: s must be >= 1");
  cfg.validate();
  return functional_series(m, s, t, f1_t, cfg, ClusterTreatment::kClustered);
}

ManyBodyOperator correlation_functional(const ModelSpec& m, int s, double t, const ManyBodyOperator& f1_t,
                                        const SeriesConfig& cfg) {
  check_one_particle(f1_t, "correlation_functional");
  if (s < 1) throw std::invalid_argument("correlation_functional: s must be >= 1");
  cfg.validate();
  return functional_series(m, s, t, f1_t, cfg, ClusterTreatment::kDeclusterized);
}

ManyBodyOperator correlation_from_marginals(const MarginalState& state, int s) {
  state.validate();
  if (s < 1) throw std::invalid_argument("correlation_from_marginals: s must be >= 1");
  if (static_cast<int>(state.marginals.size()) < s)
    throw std::out_of_range("correlation_from_marginals: marginals missing up to order s");
  const int d = state.marginals.front().dim();

  std::vector<ClusterElement> ground;
  for (int p = 1; p <= s; ++p) ground.push_back(ClusterElement::single(p));

  ManyBodyOperator out = ManyBodyOperator::zero(s, d);
  for (const SetPartition& p : partitions(ground)) {
    Matrix term = Matrix::Identity(pow_int(d, s), pow_int(d, s));
    for (const auto& block : p) {
      std::vector<int> labels;
      for (int idx : block) labels.push_back(idx + 1);
      const ManyBodyOperator& marg = state.marginals[labels.size() - 1];
      term = term * embed(marg, labels, s).entries();
    }
    const int nb = static_cast<int>(p.size());
    const double coeff = (nb % 2 == 1 ? 1.0 : -1.0) * factorial(nb - 1);
    out = out + coeff * ManyBodyOperator(s, d, std::move(term));
  }
  return out;
}

ManyBodyOperator collision_integral(const ModelSpec& m, double t, const ManyBodyOperator& f1_t,
                                    const SeriesConfig& cfg) {
  check_one_particle(f1_t, "collision_integral");
  cfg.validate();
  ManyBodyOperator two = functional_series(m, 2, t, f1_t, cfg, ClusterTreatment::kClustered);
  ManyBodyOperator kicked = -1.0 * interaction_liouvillian(m, 1, 2, two);
  return partial_trace(kicked, {2});
}

DerivativeReport derivative_consistency(const ModelSpec& m, double t, const ManyBodyOperator& f1_init,
                                        const SeriesConfig& cfg) {
  check_one_particle(f1_init, "derivative_consistency");
  cfg.validate();
  DerivativeReport rep;
  rep.t = t;
  rep.dt = cfg.dt;

  ManyBodyOperator f_t = kinetic_solution(m, t, f1_init, cfg);
  ManyBodyOperator rhs = -1.0 * liouvillian(m, f_t) + collision_integral(m, t, f_t, cfg);

  auto residual_for = [&](double dt) {
    if (t - dt >= 0.0) {
      rep.scheme_order = 2;
      ManyBodyOperator lhs = (1.0 / (2.0 * dt)) * (kinetic_solution(m, t + dt, f1_init, cfg) -
                                                   kinetic_solution(m, t - dt, f1_init, cfg));
      return max_abs_diff(lhs, rhs);
    }
    rep.scheme_order = 1;
    ManyBodyOperator lhs = (1.0 / dt) * (kinetic_solution(m, t + dt, f1_init, cfg) - f_t);
    return max_abs_diff(lhs, rhs);
  };

  rep.residual_dt = residual_for(cfg.dt);
  rep.residual_half = residual_for(cfg.dt / 2.0);
  rep.ratio = rep.residual_half > 0.0 ? rep.residual_dt / rep.residual_half : 0.0;
  return rep;
}

ManyBodyOperator invert_initial_data(const ModelSpec& m, double t, const ManyBodyOperator& f1_t,
                                     const ContractionConfig& ccfg, const SeriesConfig& cfg,
                                     Diagnostics* diag, InversionReport* report) {
  check_one_particle(f1_t, "invert_initial_data");
  ccfg.validate();
  cfg.validate();
  if (trace_norm(f1_t) >= ccfg.threshold) {
    std::ostringstream os;
    os << "trace norm " << trace_norm(f1_t) << " >= x0 = " << ccfg.threshold
       << ": contraction of the inversion mapping is not guaranteed";
    warn_to(diag, os.str());
  }

  // f^(0) = G_1(t) f1_t; the mapping subtracts the traced higher cumulant terms
  const ManyBodyOperator f0 = group_evolve(m, -t, f1_t);
  ManyBodyOperator f = f0;
  InversionReport rep;
  for (int it = 0; it < ccfg.max_iters; ++it) {
    ManyBodyOperator corr = ManyBodyOperator::zero(1, m.dim());
    for (int n = 1; n <= cfg.n_max; ++n) {
      ManyBodyOperator g = reduced_cumulant(m, t, ClusterArgument{1, n}, tensor_power(f, n + 1));
      g = partial_trace(g, label_range(2, n + 1));
      g = group_evolve(m, -t, g);  // G_1(t) applied after the trace
      corr = corr + (1.0 / factorial(n)) * g;
    }
    ManyBodyOperator next = f0 - corr;
    rep.increments.push_back(trace_norm(next - f));
    f = next;
    rep.iterations = it + 1;
    if (rep.increments.back() < ccfg.fixed_point_tol) {
      rep.converged = true;
      break;
    }
  }
  if (report != nullptr) *report = rep;
  if (!rep.converged)
    throw std::runtime_error("invert_initial_data: max_iters exceeded without convergence");
  return f;
}

double product_identity_residual(const ModelSpec& m, int s, int n, double t,
                                 const ManyBodyOperator& f1_init, const SeriesConfig& cfg,
                                 int inner_order) {
  check_one_particle(f1_init, "product_identity_residual");
  if (s < 1 || n < 0) throw std::invalid_argument("product_identity_residual: need s >= 1, n >= 0");
  cfg.validate();
  const int cap = inner_order < 0 ? cfg.n_max : inner_order;
  const int base = s + n;
  const int d = m.dim();

  // left side: the (s+n)-fold product of the kinetic solution
  ManyBodyOperator f1_t = kinetic_solution(m, t, f1_init, cfg);
  ManyBodyOperator lhs = tensor_power(f1_t, base);

  // per-label building blocks: T_b = (1/b!) Tr_{2..b+1} A_{1+b}(t,{1},2..b+1) prod f;
  // each summand of the dissection expansion factorizes over labels because its
  // cumulants act on disjoint label sets
  std::vector<ManyBodyOperator> t_of_order;
  for (int b = 0; b <= cap; ++b) {
    ManyBodyOperator g = reduced_cumulant(m, t, ClusterArgument{1, b}, tensor_power(f1_init, b + 1));
    if (b > 0) g = partial_trace(g, label_range(2, b + 1));
    t_of_order.push_back((1.0 / factorial(b)) * g);
  }

  ManyBodyOperator rhs = ManyBodyOperator::zero(base, d);
  const int n1_cap = base * cap;
  for (int n1 = 0; n1 <= n1_cap; ++n1) {
    if (n1 == 0) {
      rhs = rhs + tensor_power(t_of_order[0], base);
      continue;
    }
    for (const Dissection& dis : dissections_bounded(n1, std::min(base, n1))) {
      const int nd = dis.part_count();
      if (std::any_of(dis.parts.begin(), dis.parts.end(),
                      [&](const auto& part) { return static_cast<int>(part.size()) > cap; }))
        continue;
      // increasing index tuples i_1 < ... < i_|D| over the base labels
      for (const auto& tup : injective_tuples(nd, base)) {
        if (!std::is_sorted(tup.begin(), tup.end())) continue;
        ManyBodyOperator term = ManyBodyOperator::identity(1, d);
        bool first = true;
        for (int lbl = 1; lbl <= base; ++lbl) {
          auto pos = std::find(tup.begin(), tup.end(), lbl);
          const ManyBodyOperator& factor =
              pos == tup.end() ? t_of_order[0]
                               : t_of_order[dis.parts[pos - tup.begin()].size()];
          term = first ? factor : tensor(term, factor);
          first = false;
        }
        rhs = rhs + term;
      }
    }
  }
  return max_abs_diff(lhs, rhs);
}

double observable_average(const ManyBodyOperator& a, const ManyBodyOperator& state) {
  if (a.particle_count() != state.particle_count() || a.dim() != state.dim())
    throw std::invalid_argument("observable_average: shape mismatch");
  const Complex value = (a.entries() * state.entries()).trace();
  if (std::abs(value.imag()) >= 1e-12)
    throw std::runtime_error("observable_average: imaginary part exceeds 1e-12");
  const int s = a.particle_count();
  return value.real() / (s >= 2 ? factorial(s) : 1.0);
}

double observable_dispersion(const ManyBodyOperator& a, const ManyBodyOperator& f1,
                             const ManyBodyOperator& g2) {
  if (a.particle_count() != 1) throw std::invalid_argument("observable_dispersion: a must be one-particle");
  const double avg = observable_average(a, f1);
  ManyBodyOperator a_sq(1, a.dim(), Matrix(a.entries() * a.entries()));
  ManyBodyOperator shifted(1, a.dim(),
                           Matrix(a_sq.entries() - avg * avg * Matrix::Identity(a.side(), a.side())));
  const Complex first = (shifted.entries() * f1.entries()).trace();
  const Complex second = (tensor(a, a).entries() * g2.entries()).trace();
  const Complex total = first + second;
  if (std::abs(total.imag()) >= 1e-12)
    throw std::runtime_error("observable_dispersion: imaginary part exceeds 1e-12");
  return total.real();
}

std::vector<EquivalenceRow> equivalence_report(const ModelSpec& m, int s, double t,
                                               const ManyBodyOperator& f1_init,
                                               const std::vector<int>& n_max_list,
                                               Diagnostics* diag) {
  check_one_particle(f1_init, "equivalence_report");
  if (diag != nullptr && trace_norm(f1_init) >= functional_admissibility_bound()) {
    std::ostringstream os;
    os << "trace norm " << trace_norm(f1_init) << " >= e^-2 = " << functional_admissibility_bound()
       << ": equivalence is proven only below this bound";
    diag->warn(os.str());
  }
  std::vector<EquivalenceRow> rows;
  for (int n_max : n_max_list) {
    SeriesConfig cfg;
    cfg.n_max = n_max;
    cfg.norm_guard = false;
    ManyBodyOperator f1_t = kinetic_solution(m, t, f1_init, cfg);
    ManyBodyOperator lhs = bbgky_marginal(m, s, t, f1_init, cfg);
    ManyBodyOperator rhs = marginal_functional(m, s, t, f1_t, cfg);
    rows.push_back(EquivalenceRow{n_max, trace_norm(lhs - rhs)});
  }
  return rows;
}

}  // namespace qkin
