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

#ifndef QKIN_MANY_BODY_OPERATOR_HPP
#define QKIN_MANY_BODY_OPERATOR_HPP

#include <span>
#include <vector>

#include "qkin/types.hpp"

namespace qkin {

/// Dense complex operator on the s-fold tensor power of a d-dimensional
/// one-particle space. Row/column indices are base-d digit strings with
/// particle 1 as the most significant digit. Values are immutable after
/// construction and freely shareable across threads.
class ManyBodyOperator {
 public:
  ManyBodyOperator(int particle_count, int dim, Matrix entries);

  static ManyBodyOperator identity(int particle_count, int dim);
  static ManyBodyOperator zero(int particle_count, int dim);

  int particle_count() const { return particle_count_; }
  int dim() const { return dim_; }
  std::int64_t side() const { return entries_.rows(); }
  const Matrix& entries() const { return entries_; }

  Complex trace() const { return entries_.trace(); }
  bool is_hermitian(double tol = kHermitianTol) const;
  /// Validates hermiticity at kHermitianTol and remembers the result;
  /// throws if the entries are not hermitian.
  void mark_hermitian();
  bool hermitian_flag() const { return hermitian_flag_; }

 private:
  int particle_count_;
  int dim_;
  Matrix entries_;
  bool hermitian_flag_ = false;
};

/// Kronecker product with a on the leading particles.
ManyBodyOperator tensor(const ManyBodyOperator& a, const ManyBodyOperator& b);

/// k-fold tensor power of a one-particle operator (k >= 1).
ManyBodyOperator tensor_power(const ManyBodyOperator& a, int k);

/// Trace out the given labels (1-based); the result lives on the remaining
/// labels in their original order. Tracing every label is the scalar trace()
/// and is rejected here.
ManyBodyOperator partial_trace(const ManyBodyOperator& a, std::span<const int> traced);
ManyBodyOperator partial_trace(const ManyBodyOperator& a, std::initializer_list<int> traced);

/// Sum of singular values. For hermitian inputs this is the sum of absolute
/// eigenvalues, computed through the symmetric eigensolver.
double trace_norm(const ManyBodyOperator& a);

/// Acts as a on target_labels (a's k-th particle goes to target_labels[k]),
/// identity elsewhere.
ManyBodyOperator embed(const ManyBodyOperator& a, std::span<const int> target_labels, int total);
ManyBodyOperator embed(const ManyBodyOperator& a, std::initializer_list<int> target_labels, int total);

/// exp(scale * h) for hermitian h, via eigendecomposition. Unitary when the
/// scale is purely imaginary.
ManyBodyOperator hermitian_exponential(const ManyBodyOperator& h, Complex scale);

ManyBodyOperator operator+(const ManyBodyOperator& a, const ManyBodyOperator& b);
ManyBodyOperator operator-(const ManyBodyOperator& a, const ManyBodyOperator& b);
ManyBodyOperator operator*(Complex c, const ManyBodyOperator& a);
ManyBodyOperator operator*(double c, const ManyBodyOperator& a);

ManyBodyOperator adjoint(const ManyBodyOperator& a);
double max_abs(const ManyBodyOperator& a);
double max_abs_diff(const ManyBodyOperator& a, const ManyBodyOperator& b);

}  // namespace qkin

#endif  // QKIN_MANY_BODY_OPERATOR_HPP
