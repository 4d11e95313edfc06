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

#include "qkin/scaling.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qkin/parallel.hpp"
#include "qkin/quadrature.hpp"

namespace qkin {

void SweepSpec::validate() const {
  if (epsilons.empty()) throw std::invalid_argument("SweepSpec: epsilons must be nonempty");
  for (double e : epsilons)
    if (e <= 0.0) throw std::invalid_argument("SweepSpec: epsilons must be positive");
  for (std::size_t i = 1; i < epsilons.size(); ++i)
    if (epsilons[i] >= epsilons[i - 1])
      throw std::invalid_argument("SweepSpec: epsilons must be strictly decreasing");
  if (vlasov_order < 0) throw std::invalid_argument("SweepSpec: vlasov_order must be >= 0");
  if (quadrature_nodes < 1) throw std::invalid_argument("SweepSpec: quadrature_nodes must be >= 1");
}

ManyBodyOperator vlasov_rhs(const ModelSpec& m, const ManyBodyOperator& f1) {
  if (f1.particle_count() != 1) throw std::invalid_argument("vlasov_rhs: f1 must be one-particle");
  ManyBodyOperator out = -1.0 * liouvillian(m, f1);
  ManyBodyOperator pair = tensor(f1, f1);
  out = out + partial_trace(-1.0 * interaction_liouvillian(m, 1, 2, pair), {2});
  return out;
}

namespace {

std::vector<int> label_range(int first, int last) {
  std::vector<int> out;
  for (int p = first; p <= last; ++p) out.push_back(p);
  return out;
}

// n-th iterated-integral term before the final partial trace: operator on
// 1+n labels. The integrand is assembled right to left: the innermost free
// segment prod_{j<=n+1} G_1(-t_n) acts on the full product state, each level
// k then applies sum_i (-N_int(i, k+1)) and the free segment of span
// t_{k-1} - t_k on the labels active at that level.
ManyBodyOperator vlasov_term(const ModelSpec& m, double t, const ManyBodyOperator& f1_init, int n,
                             int nodes) {
  const int total = 1 + n;
  const ManyBodyOperator product = tensor_power(f1_init, total);

  std::function<ManyBodyOperator(int, double)> level = [&](int k, double upper) {
    const QuadratureRule rule = gauss_legendre(nodes, 0.0, upper);
    ManyBodyOperator acc = ManyBodyOperator::zero(total, m.dim());
    for (int q = 0; q < nodes; ++q) {
      const double tk = rule.nodes[q];
      ManyBodyOperator g = (k == n)
                               ? free_evolve_on(m, tk, label_range(1, total), product)
                               : level(k + 1, tk);
      ManyBodyOperator h = ManyBodyOperator::zero(total, m.dim());
      for (int i = 1; i <= k; ++i) h = h - interaction_liouvillian(m, i, k + 1, g);
      h = free_evolve_on(m, upper - tk, label_range(1, k), h);
      acc = acc + rule.weights[q] * h;
    }
    return acc;
  };
  return level(1, t);
}

}  // namespace

ManyBodyOperator vlasov_series(const ModelSpec& m, double t, const ManyBodyOperator& f1_init, int order,
                               int quadrature_nodes) {
  if (f1_init.particle_count() != 1) throw std::invalid_argument("vlasov_series: f1 must be one-particle");
  if (order < 0) throw std::invalid_argument("vlasov_series: order must be >= 0");
  std::vector<int> all{1};
  ManyBodyOperator out = free_evolve_on(m, t, all, f1_init);
  for (int n = 1; n <= order; ++n) {
    ManyBodyOperator g = vlasov_term(m, t, f1_init, n, quadrature_nodes);
    out = out + partial_trace(g, label_range(2, 1 + n));
  }
  return out;
}

std::vector<MeanfieldRow> meanfield_sweep(const ModelSpec& m_base, const SweepSpec& sweep,
                                          const ManyBodyOperator& f1_limit_init, const SeriesConfig& cfg,
                                          Diagnostics* diag, int workers) {
  sweep.validate();
  cfg.validate();
  if (f1_limit_init.particle_count() != 1)
    throw std::invalid_argument("meanfield_sweep: f1_limit_init must be one-particle");
  const double largest = sweep.epsilons.front();
  if (trace_norm(f1_limit_init) / largest >= functional_admissibility_bound()) {
    std::ostringstream os;
    os << "rescaled initial datum at the largest coupling has trace norm "
       << trace_norm(f1_limit_init) / largest << " >= e^-2: outside the series-admissible regime";
    warn_to(diag, os.str());
  }

  const ModelSpec m_limit = m_base.with_coupling(1.0);
  const ManyBodyOperator limit =
      vlasov_series(m_limit, sweep.time, f1_limit_init, sweep.vlasov_order, sweep.quadrature_nodes);

  std::vector<MeanfieldRow> rows(sweep.epsilons.size());
  parallel_indexed(sweep.epsilons.size(), workers, [&](std::size_t i) {
    const double eps = sweep.epsilons[i];
    const ModelSpec m_eps = m_base.with_coupling(eps);
    SeriesConfig local = cfg;
    local.norm_guard = false;  // guard handled once above
    ManyBodyOperator f_eps = kinetic_solution(m_eps, sweep.time, (1.0 / eps) * f1_limit_init, local);
    rows[i] = MeanfieldRow{eps, trace_norm(eps * f_eps - limit), 0.0};
  });
  for (std::size_t i = 0; i + 1 < rows.size(); ++i)
    rows[i].ratio = rows[i + 1].delta > 0.0 ? rows[i].delta / rows[i + 1].delta : 0.0;
  return rows;
}

std::vector<ChaosRow> chaos_check(const ModelSpec& m_base, const SweepSpec& sweep,
                                  const ManyBodyOperator& f1_limit_init, int s, const SeriesConfig& cfg,
                                  Diagnostics* diag, int workers) {
  sweep.validate();
  cfg.validate();
  if (s < 1) throw std::invalid_argument("chaos_check: s must be >= 1");
  if (f1_limit_init.particle_count() != 1)
    throw std::invalid_argument("chaos_check: f1_limit_init must be one-particle");
  const double largest = sweep.epsilons.front();
  if (trace_norm(f1_limit_init) / largest >= functional_admissibility_bound()) {
    std::ostringstream os;
    os << "rescaled initial datum at the largest coupling has trace norm "
       << trace_norm(f1_limit_init) / largest << " >= e^-2: outside the series-admissible regime";
    warn_to(diag, os.str());
  }

  const ModelSpec m_limit = m_base.with_coupling(1.0);
  const ManyBodyOperator limit =
      vlasov_series(m_limit, sweep.time, f1_limit_init, sweep.vlasov_order, sweep.quadrature_nodes);
  const ManyBodyOperator limit_product = tensor_power(limit, s);

  std::vector<ChaosRow> rows(sweep.epsilons.size());
  parallel_indexed(sweep.epsilons.size(), workers, [&](std::size_t i) {
    const double eps = sweep.epsilons[i];
    const double eps_pow = std::pow(eps, s);
    const ModelSpec m_eps = m_base.with_coupling(eps);
    SeriesConfig local = cfg;
    local.norm_guard = false;
    ManyBodyOperator f1_t = kinetic_solution(m_eps, sweep.time, (1.0 / eps) * f1_limit_init, local);
    ManyBodyOperator marg = marginal_functional(m_eps, s, sweep.time, f1_t, local);
    ManyBodyOperator corr = correlation_functional(m_eps, s, sweep.time, f1_t, local);
    rows[i] = ChaosRow{eps, trace_norm(eps_pow * marg - limit_product), trace_norm(eps_pow * corr)};
  });
  return rows;
}

}  // namespace qkin
