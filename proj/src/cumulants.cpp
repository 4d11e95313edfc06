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

#include "qkin/cumulants.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

#include "qkin/combinatorics.hpp"
#include "qkin/quadrature.hpp"

namespace qkin {

namespace {

double factorial(int n) {
  double out = 1.0;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

double binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

void check_argument(const ClusterArgument& arg, const ManyBodyOperator& f) {
  if (arg.cluster_size < 1 || arg.extra < 0) throw std::invalid_argument("ClusterArgument: need s >= 1, n >= 0");
  if (f.particle_count() != arg.cluster_size + arg.extra)
    throw std::invalid_argument("cumulant: f must live on s+n particles");
}

// Ordered element list: elems[0] may be the cluster (labels 1..s); the rest
// are singletons. Declusterized lists are all singletons.
using Elements = std::vector<std::vector<int>>;

Elements standard_elements(int s, int n) {
  Elements e;
  std::vector<int> cluster(s);
  std::iota(cluster.begin(), cluster.end(), 1);
  e.push_back(std::move(cluster));
  for (int i = 1; i <= n; ++i) e.push_back({s + i});
  return e;
}

Elements singleton_elements(int s, int n) {
  Elements e;
  for (int i = 1; i <= s + n; ++i) e.push_back({i});
  return e;
}

std::vector<int> prefix_labels(const Elements& elems, int count) {
  std::vector<int> out;
  for (int i = 0; i < count; ++i) out.insert(out.end(), elems[i].begin(), elems[i].end());
  return out;
}

enum class Flavor { kGroup, kScattering };

ManyBodyOperator evolve_on(const ModelSpec& m, double t, const std::vector<int>& labels,
                           const ManyBodyOperator& f, Flavor flavor) {
  return flavor == Flavor::kGroup ? group_evolve_on(m, t, labels, f) : scattering_on(m, t, labels, f);
}

// sum_k (-1)^k C(n,k) * evolve on the labels of the first n+1-k elements
ManyBodyOperator reduced_cumulant_apply(const ModelSpec& m, double t, const Elements& elems,
                                        const ManyBodyOperator& f, Flavor flavor) {
  const int n = static_cast<int>(elems.size()) - 1;
  ManyBodyOperator out = ManyBodyOperator::zero(f.particle_count(), f.dim());
  for (int k = 0; k <= n; ++k) {
    ManyBodyOperator g = evolve_on(m, t, prefix_labels(elems, n + 1 - k), f, flavor);
    const double coeff = (k % 2 == 0 ? 1.0 : -1.0) * binomial(n, k);
    out = out + coeff * g;
  }
  return out;
}

// alternating partition sum; blocks are disjoint so the in-block order of
// application is immaterial
ManyBodyOperator partition_cumulant_apply(const ModelSpec& m, double t, const Elements& elems,
                                          const ManyBodyOperator& f, Flavor flavor) {
  std::vector<ClusterElement> ground;
  for (const auto& e : elems)
    ground.push_back(e.size() == 1 ? ClusterElement::single(e[0]) : ClusterElement::cluster(e));
  ManyBodyOperator out = ManyBodyOperator::zero(f.particle_count(), f.dim());
  for (const SetPartition& p : partitions(ground)) {
    ManyBodyOperator g = f;
    for (const auto& block : p) {
      std::vector<int> labels;
      for (int idx : block) labels.insert(labels.end(), elems[idx].begin(), elems[idx].end());
      g = evolve_on(m, t, labels, g, flavor);
    }
    const int nb = static_cast<int>(p.size());
    const double coeff = (nb % 2 == 1 ? 1.0 : -1.0) * factorial(nb - 1);
    out = out + coeff * g;
  }
  return out;
}

// dissection-sum factor: over dissections D of the ordered label block Z with
// |D| <= m_avail, injective tuples (i_1..i_|D|) in 1..m_avail, products of
// reduced scattering cumulants Ahat_{1+|X|}(t, i_l, X_l) with 1/|D|!, 1/|X|!
// weights. Factors inside one dissection act on disjoint labels.
ManyBodyOperator s_factor_apply(const ModelSpec& m, double t, const std::vector<int>& z_labels,
                                int m_avail, const ManyBodyOperator& f) {
  const int nz = static_cast<int>(z_labels.size());
  ManyBodyOperator out = ManyBodyOperator::zero(f.particle_count(), f.dim());
  for (const Dissection& d : dissections_bounded(nz, std::min(m_avail, nz))) {
    const int nd = d.part_count();
    for (const auto& tup : injective_tuples(nd, m_avail)) {
      ManyBodyOperator g = f;
      double weight = 1.0 / factorial(nd);
      for (int l = 0; l < nd; ++l) {
        Elements elems;
        elems.push_back({tup[l]});
        for (int pos : d.parts[l]) elems.push_back({z_labels[pos - 1]});
        g = reduced_cumulant_apply(m, t, elems, g, Flavor::kScattering);
        weight /= factorial(static_cast<int>(d.parts[l].size()));
      }
      out = out + weight * g;
    }
  }
  return out;
}

ManyBodyOperator leading_cumulant_apply(const ModelSpec& m, double t, int s, int r,
                                        const ManyBodyOperator& f, ClusterTreatment treatment) {
  if (treatment == ClusterTreatment::kClustered)
    return reduced_cumulant_apply(m, t, standard_elements(s, r), f, Flavor::kScattering);
  return partition_cumulant_apply(m, t, singleton_elements(s, r), f, Flavor::kScattering);
}

// closed formula: for each composition (n_1..n_k) apply the dissection factor
// of Z_1 (the topmost n_1 labels) first, then Z_2, ..., then the leading
// cumulant on the surviving s+r labels
ManyBodyOperator v_direct_apply(const ModelSpec& m, double t, int s, int n, const ManyBodyOperator& f,
                                ClusterTreatment treatment) {
  ManyBodyOperator out = ManyBodyOperator::zero(f.particle_count(), f.dim());
  for (int k = 0; k <= n; ++k) {
    for (const auto& comp : bounded_compositions(n, k)) {
      int consumed = 0;
      ManyBodyOperator g = f;
      for (int j = 0; j < k; ++j) {
        consumed += comp[j];
        const int mj = s + n - consumed;
        std::vector<int> z(comp[j]);
        std::iota(z.begin(), z.end(), mj + 1);
        g = s_factor_apply(m, t, z, mj, g);
      }
      const int r = n - consumed;
      g = leading_cumulant_apply(m, t, s, r, g, treatment);
      const double coeff = (k % 2 == 0 ? 1.0 : -1.0) * factorial(n) / factorial(r);
      out = out + coeff * g;
    }
  }
  return out;
}

// --- recursive route ---
//
// Lower-order operators appear repeatedly along the recursion paths of the
// cluster expansion, applied to different operands. While the label space is
// small we therefore build, once per top-level call, the superoperator matrix
// of each order r = 0..n on the full s+n-label space (acting on labels
// 1..s+r, identity beyond) and run the recurrence at the matrix level. Above
// the size cap the plain recursion is used.

constexpr std::int64_t kMemoSideCap = 32;  // d^(s+n) above this: plain recursion

// plain recursion; lower-order operators act on the leading s+n-n1 labels of f
ManyBodyOperator v_recursive_plain(const ModelSpec& m, double t, int s, int n,
                                   const ManyBodyOperator& f, ClusterTreatment treatment) {
  ManyBodyOperator out = leading_cumulant_apply(m, t, s, n, f, treatment);
  for (int n1 = 1; n1 <= n; ++n1) {
    const int m1 = s + n - n1;
    std::vector<int> z(n1);
    std::iota(z.begin(), z.end(), m1 + 1);
    ManyBodyOperator g = s_factor_apply(m, t, z, m1, f);
    g = v_recursive_plain(m, t, s, n - n1, g, treatment);
    out = out - (factorial(n) / factorial(n - n1)) * g;
  }
  return out;
}

// superoperator matrix of a map on the full space, by probing matrix units
// (vec is column-major)
template <typename Apply>
Matrix probe_superop(std::int64_t side, int particles, int dim, Apply&& apply) {
  Matrix v(side * side, side * side);
  for (std::int64_t col = 0; col < side * side; ++col) {
    Matrix unit = Matrix::Zero(side, side);
    unit(col % side, col / side) = 1.0;
    ManyBodyOperator image = apply(ManyBodyOperator(particles, dim, std::move(unit)));
    v.col(col) = Eigen::Map<const Eigen::VectorXcd>(image.entries().data(), side * side);
  }
  return v;
}

ManyBodyOperator v_recursive_apply(const ModelSpec& m, double t, int s, int n,
                                   const ManyBodyOperator& f, ClusterTreatment treatment) {
  const std::int64_t side = f.side();
  if (side > kMemoSideCap) return v_recursive_plain(m, t, s, n, f, treatment);

  const int total = f.particle_count();
  std::vector<Matrix> v_of_order;  // memo keyed by order r; s, t fixed per call
  v_of_order.reserve(n + 1);
  for (int r = 0; r <= n; ++r) {
    Matrix vr = probe_superop(side, total, f.dim(), [&](const ManyBodyOperator& e) {
      return leading_cumulant_apply(m, t, s, r, e, treatment);
    });
    for (int n1 = 1; n1 <= r; ++n1) {
      const int m1 = s + r - n1;
      std::vector<int> z(n1);
      std::iota(z.begin(), z.end(), m1 + 1);
      Matrix sf = probe_superop(side, total, f.dim(), [&](const ManyBodyOperator& e) {
        return s_factor_apply(m, t, z, m1, e);
      });
      vr -= (factorial(r) / factorial(r - n1)) * (v_of_order[r - n1] * sf);
    }
    v_of_order.push_back(std::move(vr));
  }
  Eigen::Map<const Eigen::VectorXcd> x(f.entries().data(), side * side);
  Eigen::VectorXcd y = v_of_order[n] * x;
  Matrix out = Eigen::Map<const Matrix>(y.data(), side, side);
  return ManyBodyOperator(total, f.dim(), std::move(out));
}

}  // namespace

ManyBodyOperator partition_cumulant(const ModelSpec& m, double t, const ClusterArgument& arg,
                                    const ManyBodyOperator& f) {
  check_argument(arg, f);
  return partition_cumulant_apply(m, t, standard_elements(arg.cluster_size, arg.extra), f, Flavor::kGroup);
}

ManyBodyOperator reduced_cumulant(const ModelSpec& m, double t, const ClusterArgument& arg,
                                  const ManyBodyOperator& f) {
  check_argument(arg, f);
  return reduced_cumulant_apply(m, t, standard_elements(arg.cluster_size, arg.extra), f, Flavor::kGroup);
}

ManyBodyOperator reduced_scattering_cumulant(const ModelSpec& m, double t, const ClusterArgument& arg,
                                             const ManyBodyOperator& f) {
  check_argument(arg, f);
  return reduced_cumulant_apply(m, t, standard_elements(arg.cluster_size, arg.extra), f,
                                Flavor::kScattering);
}

ManyBodyOperator v_operator_direct(const ModelSpec& m, double t, const ClusterArgument& arg,
                                   const ManyBodyOperator& f, ClusterTreatment treatment) {
  check_argument(arg, f);
  return v_direct_apply(m, t, arg.cluster_size, arg.extra, f, treatment);
}

ManyBodyOperator v_operator_recursive(const ModelSpec& m, double t, const ClusterArgument& arg,
                                      const ManyBodyOperator& f, ClusterTreatment treatment) {
  check_argument(arg, f);
  return v_recursive_apply(m, t, arg.cluster_size, arg.extra, f, treatment);
}

namespace {

// integral form of Ahat_2(t, {first s labels as one element}, extra): the
// scattering operator inside the integrand carries t - tau (the printed tau - t
// does not satisfy the identity; see the derivative of
// G_s(-tau)G_1(-tau) Ghat_{s+1}(t-tau) prod G_1(tau))
ManyBodyOperator duhamel_integral(const ModelSpec& m, double t, const std::vector<int>& cluster,
                                  int extra_label, const ManyBodyOperator& f, int nodes) {
  ManyBodyOperator out = ManyBodyOperator::zero(f.particle_count(), f.dim());
  if (t == 0.0) return out;
  std::vector<int> active = cluster;
  active.push_back(extra_label);
  const QuadratureRule rule = gauss_legendre(nodes, 0.0, t);
  for (int q = 0; q < nodes; ++q) {
    const double tau = rule.nodes[q];
    ManyBodyOperator g = free_evolve_on(m, -tau, active, f);  // prod_i G_1(tau, i)
    g = scattering_on(m, t - tau, active, g);
    ManyBodyOperator h = ManyBodyOperator::zero(f.particle_count(), f.dim());
    for (int i : cluster) h = h - interaction_liouvillian(m, i, extra_label, g);
    h = group_evolve_on(m, tau, cluster, h);            // G_s(-tau) on the cluster
    h = free_evolve_on(m, tau, {&extra_label, 1}, h);   // G_1(-tau) on the extra
    out = out + rule.weights[q] * h;
  }
  return out;
}

}  // namespace

double duhamel_residual(const ModelSpec& m, double t, int s, const ManyBodyOperator& f,
                        int quadrature_nodes) {
  if (f.particle_count() != s + 1) throw std::invalid_argument("duhamel_residual: f must live on s+1 particles");
  ClusterArgument arg{s, 1};
  ManyBodyOperator lhs = reduced_scattering_cumulant(m, t, arg, f);
  std::vector<int> cluster(s);
  std::iota(cluster.begin(), cluster.end(), 1);
  ManyBodyOperator rhs = duhamel_integral(m, t, cluster, s + 1, f, quadrature_nodes);
  return max_abs_diff(lhs, rhs);
}

ManyBodyOperator v2_duhamel_form(const ModelSpec& m, double t, int s, const ManyBodyOperator& f,
                                 int quadrature_nodes) {
  if (f.particle_count() != s + 1) throw std::invalid_argument("v2_duhamel_form: f must live on s+1 particles");
  std::vector<int> cluster(s);
  std::iota(cluster.begin(), cluster.end(), 1);
  ManyBodyOperator out = duhamel_integral(m, t, cluster, s + 1, f, quadrature_nodes);
  // minus Ahat_1(t,{Y}) sum_i [integral form of Ahat_2(t, i, s+1)]
  ManyBodyOperator acc = ManyBodyOperator::zero(f.particle_count(), f.dim());
  for (int i : cluster) acc = acc + duhamel_integral(m, t, {i}, s + 1, f, quadrature_nodes);
  out = out - scattering_on(m, t, cluster, acc);
  return out;
}

}  // namespace qkin
