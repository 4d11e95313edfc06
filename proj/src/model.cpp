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

#include "qkin/model.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <stdexcept>
#include <vector>

namespace qkin {

namespace {

bool matrix_hermitian(const Matrix& a, double tol) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

// particle-swap permutation on the two-particle space
Matrix swap_matrix(int d) {
  Matrix s = Matrix::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) s(a * d + b, b * d + a) = 1.0;
  return s;
}

}  // namespace

ModelSpec::ModelSpec(int dim, double hbar, Matrix one_body, Matrix pair_potential, double coupling)
    : dim_(dim),
      hbar_(hbar),
      one_body_(std::move(one_body)),
      pair_potential_(std::move(pair_potential)),
      coupling_(coupling) {
  if (dim_ < 2) throw std::invalid_argument("ModelSpec: dim must be >= 2");
  if (hbar_ <= 0.0) throw std::invalid_argument("ModelSpec: hbar must be positive");
  if (coupling_ < 0.0) throw std::invalid_argument("ModelSpec: coupling must be >= 0");
  if (one_body_.rows() != dim_ || one_body_.cols() != dim_)
    throw std::invalid_argument("ModelSpec: one_body must be dim x dim");
  if (pair_potential_.rows() != dim_ * dim_ || pair_potential_.cols() != dim_ * dim_)
    throw std::invalid_argument("ModelSpec: pair_potential must be dim^2 x dim^2");
  if (!matrix_hermitian(one_body_, kHermitianTol))
    throw std::invalid_argument("ModelSpec: one_body is not hermitian within 1e-12");
  if (!matrix_hermitian(pair_potential_, kHermitianTol))
    throw std::invalid_argument("ModelSpec: pair_potential is not hermitian within 1e-12");
  const Matrix s = swap_matrix(dim_);
  if ((s * pair_potential_ * s - pair_potential_).cwiseAbs().maxCoeff() > kHermitianTol)
    throw std::invalid_argument("ModelSpec: pair_potential is not swap-symmetric within 1e-12");
}

ModelSpec ModelSpec::with_coupling(double coupling) const {
  return ModelSpec(dim_, hbar_, one_body_, pair_potential_, coupling);
}

ManyBodyOperator ModelSpec::hamiltonian(int s) const {
  if (s < 1) throw std::invalid_argument("hamiltonian: s must be >= 1");
  ManyBodyOperator one(1, dim_, one_body_);
  ManyBodyOperator h = ManyBodyOperator::zero(s, dim_);
  for (int i = 1; i <= s; ++i) h = h + embed(one, {i}, s);
  if (coupling_ != 0.0 && s >= 2) {
    ManyBodyOperator phi(2, dim_, pair_potential_);
    for (int i = 1; i <= s; ++i)
      for (int j = i + 1; j <= s; ++j) h = h + coupling_ * embed(phi, {i, j}, s);
  }
  return h;
}

std::shared_ptr<const ModelSpec::Eigensystem> ModelSpec::eigensystem(int s) const {
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    auto it = eig_cache_.find(s);
    if (it != eig_cache_.end()) return it->second;
  }
  // computed without the lock held; insertion is idempotent
  Eigen::SelfAdjointEigenSolver<Matrix> es(hamiltonian(s).entries());
  auto sys = std::make_shared<Eigensystem>();
  sys->values = es.eigenvalues();
  sys->vectors = es.eigenvectors();
  std::lock_guard<std::mutex> lock(cache_mutex_);
  auto [it, inserted] = eig_cache_.emplace(s, std::move(sys));
  return it->second;
}

Matrix ModelSpec::evolution_unitary(int s, double t) const {
  auto sys = eigensystem(s);
  Eigen::VectorXcd phases(sys->values.size());
  for (Eigen::Index i = 0; i < sys->values.size(); ++i)
    phases(i) = std::exp(Complex(0.0, -t / hbar_) * sys->values(i));
  return sys->vectors * phases.asDiagonal() * sys->vectors.adjoint();
}

Matrix ModelSpec::free_unitary(double t) const {
  std::shared_ptr<const Eigensystem> sys;
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (!free_eig_) {
      Eigen::SelfAdjointEigenSolver<Matrix> es(one_body_);
      auto fresh = std::make_shared<Eigensystem>();
      fresh->values = es.eigenvalues();
      fresh->vectors = es.eigenvectors();
      free_eig_ = std::move(fresh);
    }
    sys = free_eig_;
  }
  Eigen::VectorXcd phases(sys->values.size());
  for (Eigen::Index i = 0; i < sys->values.size(); ++i)
    phases(i) = std::exp(Complex(0.0, -t / hbar_) * sys->values(i));
  return sys->vectors * phases.asDiagonal() * sys->vectors.adjoint();
}

namespace {

ManyBodyOperator conjugate_embedded(const ModelSpec& m, const Matrix& w, std::span<const int> labels,
                                    const ManyBodyOperator& f) {
  const int k = static_cast<int>(labels.size());
  ManyBodyOperator wop(k, m.dim(), w);
  ManyBodyOperator we = embed(wop, labels, f.particle_count());
  Matrix out = we.entries() * f.entries() * we.entries().adjoint();
  return ManyBodyOperator(f.particle_count(), f.dim(), std::move(out));
}

std::vector<int> sorted_labels(std::span<const int> labels) {
  std::vector<int> out(labels.begin(), labels.end());
  std::sort(out.begin(), out.end());
  return out;
}

Matrix free_product_unitary(const ModelSpec& m, double t, int k) {
  Matrix u1 = m.free_unitary(t);
  Matrix out = u1;
  for (int i = 1; i < k; ++i) {
    Matrix next(out.rows() * u1.rows(), out.cols() * u1.cols());
    for (Eigen::Index r = 0; r < out.rows(); ++r)
      for (Eigen::Index c = 0; c < out.cols(); ++c)
        next.block(r * u1.rows(), c * u1.cols(), u1.rows(), u1.cols()) = out(r, c) * u1;
    out = std::move(next);
  }
  return out;
}

}  // namespace

ManyBodyOperator group_evolve(const ModelSpec& m, double t, const ManyBodyOperator& f) {
  const int s = f.particle_count();
  Matrix u = m.evolution_unitary(s, t);
  Matrix out = u * f.entries() * u.adjoint();
  return ManyBodyOperator(s, f.dim(), std::move(out));
}

ManyBodyOperator group_evolve_on(const ModelSpec& m, double t, std::span<const int> labels,
                                 const ManyBodyOperator& f) {
  // H_k is permutation-symmetric (swap-symmetric potential, all pairs), so the
  // label order inside the block does not matter
  auto lbl = sorted_labels(labels);
  return conjugate_embedded(m, m.evolution_unitary(static_cast<int>(lbl.size()), t), lbl, f);
}

ManyBodyOperator free_evolve_on(const ModelSpec& m, double t, std::span<const int> labels,
                                const ManyBodyOperator& f) {
  auto lbl = sorted_labels(labels);
  return conjugate_embedded(m, free_product_unitary(m, t, static_cast<int>(lbl.size())), lbl, f);
}

ManyBodyOperator scattering_operator(const ModelSpec& m, double t, const ManyBodyOperator& f) {
  std::vector<int> all(f.particle_count());
  for (int i = 0; i < f.particle_count(); ++i) all[i] = i + 1;
  return scattering_on(m, t, all, f);
}

ManyBodyOperator scattering_on(const ModelSpec& m, double t, std::span<const int> labels,
                               const ManyBodyOperator& f) {
  auto lbl = sorted_labels(labels);
  const int k = static_cast<int>(lbl.size());
  // Ghat_k(t) = G_k(-t) prod_i G_1(t,i): one conjugation by U_k(t) Ufree_k(t)^dagger
  Matrix w = m.evolution_unitary(k, t) * free_product_unitary(m, t, k).adjoint();
  return conjugate_embedded(m, w, lbl, f);
}

ManyBodyOperator liouvillian(const ModelSpec& m, const ManyBodyOperator& f) {
  const Matrix& h = m.hamiltonian(f.particle_count()).entries();
  Matrix out = Complex(0.0, -1.0 / m.hbar()) * (f.entries() * h - h * f.entries());
  return ManyBodyOperator(f.particle_count(), f.dim(), std::move(out));
}

ManyBodyOperator interaction_liouvillian(const ModelSpec& m, int i, int j, const ManyBodyOperator& f) {
  if (i == j) throw std::invalid_argument("interaction_liouvillian: labels must differ");
  const int total = f.particle_count();
  if (i < 1 || j < 1 || i > total || j > total)
    throw std::out_of_range("interaction_liouvillian: label out of range");
  ManyBodyOperator phi(2, m.dim(), m.pair_potential());
  const int lo = std::min(i, j), hi = std::max(i, j);
  Matrix p = m.coupling() * embed(phi, {lo, hi}, total).entries();
  Matrix out = Complex(0.0, -1.0 / m.hbar()) * (f.entries() * p - p * f.entries());
  return ManyBodyOperator(total, f.dim(), std::move(out));
}

}  // namespace qkin
