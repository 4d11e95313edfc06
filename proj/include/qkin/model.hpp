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

#ifndef QKIN_MODEL_HPP
#define QKIN_MODEL_HPP

#include <map>
#include <memory>
#include <mutex>
#include <span>

#include "qkin/many_body_operator.hpp"
#include "qkin/types.hpp"

namespace qkin {

/// Finite-dimensional model data: one-particle dimension, hbar, a hermitian
/// one-body operator standing in for the kinetic term, a hermitian
/// swap-symmetric two-body potential, and the coupling that multiplies the
/// potential everywhere. Immutable after construction; shareable across
/// threads (the eigensystem cache is internally synchronized).
class ModelSpec {
 public:
  ModelSpec(int dim, double hbar, Matrix one_body, Matrix pair_potential, double coupling);

  int dim() const { return dim_; }
  double hbar() const { return hbar_; }
  const Matrix& one_body() const { return one_body_; }
  const Matrix& pair_potential() const { return pair_potential_; }
  double coupling() const { return coupling_; }

  ModelSpec with_coupling(double coupling) const;

  /// H_s = sum_i one_body(i) + coupling * sum_{i<j} Phi(i,j)
  ManyBodyOperator hamiltonian(int s) const;

  /// e^{-(i/hbar) t H_s} on the s-particle space (canonical labels 1..s)
  Matrix evolution_unitary(int s, double t) const;
  /// e^{-(i/hbar) t h} for the one-body operator
  Matrix free_unitary(double t) const;

 private:
  struct Eigensystem {
    Eigen::VectorXd values;
    Matrix vectors;
  };
  std::shared_ptr<const Eigensystem> eigensystem(int s) const;

  int dim_;
  double hbar_;
  Matrix one_body_;
  Matrix pair_potential_;
  double coupling_;

  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::shared_ptr<const Eigensystem>> eig_cache_;
  mutable std::shared_ptr<const Eigensystem> free_eig_;
};

/// G_s(-t) f = e^{-(i/hbar) t H_s} f e^{(i/hbar) t H_s} on all labels of f.
ManyBodyOperator group_evolve(const ModelSpec& m, double t, const ManyBodyOperator& f);

/// G_{|labels|}(-t) acting jointly on the given labels, identity elsewhere.
ManyBodyOperator group_evolve_on(const ModelSpec& m, double t, std::span<const int> labels,
                                 const ManyBodyOperator& f);

/// prod_{i in labels} G_1(-t, i): free one-body evolution per label.
ManyBodyOperator free_evolve_on(const ModelSpec& m, double t, std::span<const int> labels,
                                const ManyBodyOperator& f);

/// Ghat_n(t) = G_n(-t) prod_i G_1(t, i) on all labels of f; identity when the
/// coupling vanishes and for n = 1.
ManyBodyOperator scattering_operator(const ModelSpec& m, double t, const ManyBodyOperator& f);

/// Ghat_{|labels|}(t) acting on the given labels, identity elsewhere.
ManyBodyOperator scattering_on(const ModelSpec& m, double t, std::span<const int> labels,
                               const ManyBodyOperator& f);

/// N_s f = -(i/hbar)(f H_s - H_s f). The group generator is -N_s.
ManyBodyOperator liouvillian(const ModelSpec& m, const ManyBodyOperator& f);

/// N_int(i,j) f = -(i/hbar)(f Phi(i,j) - Phi(i,j) f) with the coupling folded
/// into the potential.
ManyBodyOperator interaction_liouvillian(const ModelSpec& m, int i, int j, const ManyBodyOperator& f);

}  // namespace qkin

#endif  // QKIN_MODEL_HPP
