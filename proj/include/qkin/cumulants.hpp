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

#ifndef QKIN_CUMULANTS_HPP
#define QKIN_CUMULANTS_HPP

#include "qkin/model.hpp"

namespace qkin {

/// Argument pattern ({Y}, s+1, ..., s+n): a cluster of the first s labels
/// treated as one element, plus n added particles.
struct ClusterArgument {
  int cluster_size = 1;  // s
  int extra = 0;         // n
};

/// How the cluster is treated inside cumulant combinatorics. Declusterized
/// arguments split the cluster into separate singleton elements; the leading
/// cumulant then becomes the full partition cumulant of scattering operators
/// over s+n singletons (the form that makes the correlation functionals
/// close against the marginal route).
enum class ClusterTreatment { kClustered, kDeclusterized };

/// Partition cumulant of the evolution groups over ({Y}, s+1..s+n): the
/// alternating sum over set partitions, each block evolving jointly.
ManyBodyOperator partition_cumulant(const ModelSpec& m, double t, const ClusterArgument& arg,
                                    const ManyBodyOperator& f);

/// Reduced cumulant of the evolution groups: the binomial alternating sum
/// where G_{s+n-k}(-t) acts on the first s+n-k labels, identity on the rest.
ManyBodyOperator reduced_cumulant(const ModelSpec& m, double t, const ClusterArgument& arg,
                                  const ManyBodyOperator& f);

/// Same binomial sum with scattering operators in place of the groups.
ManyBodyOperator reduced_scattering_cumulant(const ModelSpec& m, double t, const ClusterArgument& arg,
                                             const ManyBodyOperator& f);

/// The (n+1)-order evolution operator by the closed nested-sum formula:
/// compositions, bounded dissections with injective index tuples, reduced
/// scattering cumulants. The dissection factors apply in ascending block
/// order (topmost label block first), which reproduces the explicit low-order
/// forms term by term.
ManyBodyOperator v_operator_direct(const ModelSpec& m, double t, const ClusterArgument& arg,
                                   const ManyBodyOperator& f,
                                   ClusterTreatment treatment = ClusterTreatment::kClustered);

/// The same operator through the kinetic cluster-expansion recurrence,
/// memoizing lower-order superoperators per call while the label space stays
/// small. Cross-validates v_operator_direct.
ManyBodyOperator v_operator_recursive(const ModelSpec& m, double t, const ClusterArgument& arg,
                                      const ManyBodyOperator& f,
                                      ClusterTreatment treatment = ClusterTreatment::kClustered);

/// Max-abs residual between the second-order reduced scattering cumulant and
/// its Duhamel integral representation, Gauss-Legendre on [0, t].
/// f lives on s+1 particles.
double duhamel_residual(const ModelSpec& m, double t, int s, const ManyBodyOperator& f,
                        int quadrature_nodes);

/// The Duhamel-assembled second-order evolution operator: the integral form
/// of the leading cumulant minus the scattering-dressed sum of pair integrals.
ManyBodyOperator v2_duhamel_form(const ModelSpec& m, double t, int s, const ManyBodyOperator& f,
                                 int quadrature_nodes);

}  // namespace qkin

#endif  // QKIN_CUMULANTS_HPP
