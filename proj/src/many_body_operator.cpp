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

#include "qkin/many_body_operator.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <set>
#include <stdexcept>

namespace qkin {

std::int64_t pow_int(int base, int exponent) {
  if (base < 1 || exponent < 0) throw std::invalid_argument("pow_int: bad arguments");
  std::int64_t out = 1;
  for (int i = 0; i < exponent; ++i) {
    if (out > (1LL << 40) / base) throw std::length_error("pow_int: dimension overflow");
    out *= base;
  }
  return out;
}

ManyBodyOperator::ManyBodyOperator(int particle_count, int dim, Matrix entries)
    : particle_count_(particle_count), dim_(dim), entries_(std::move(entries)) {
  if (particle_count_ < 1) throw std::invalid_argument("ManyBodyOperator: particle_count must be >= 1");
  if (dim_ < 2) throw std::invalid_argument("ManyBodyOperator: dim must be >= 2");
  const std::int64_t expected = pow_int(dim_, particle_count_);
  if (entries_.rows() != expected || entries_.cols() != expected)
    throw std::invalid_argument("ManyBodyOperator: entries must be square with side dim^particle_count");
}

ManyBodyOperator ManyBodyOperator::identity(int particle_count, int dim) {
  const std::int64_t side = pow_int(dim, particle_count);
  return ManyBodyOperator(particle_count, dim, Matrix::Identity(side, side));
}

ManyBodyOperator ManyBodyOperator::zero(int particle_count, int dim) {
  const std::int64_t side = pow_int(dim, particle_count);
  return ManyBodyOperator(particle_count, dim, Matrix::Zero(side, side));
}

bool ManyBodyOperator::is_hermitian(double tol) const {
  return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

void ManyBodyOperator::mark_hermitian() {
  if (!is_hermitian()) throw std::invalid_argument("mark_hermitian: entries are not hermitian within 1e-12");
  hermitian_flag_ = true;
}

ManyBodyOperator tensor(const ManyBodyOperator& a, const ManyBodyOperator& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("tensor: dimension mismatch");
  const std::int64_t ra = a.side(), rb = b.side();
  Matrix out(ra * rb, ra * rb);
  for (std::int64_t i = 0; i < ra; ++i)
    for (std::int64_t j = 0; j < ra; ++j)
      out.block(i * rb, j * rb, rb, rb) = a.entries()(i, j) * b.entries();
  return ManyBodyOperator(a.particle_count() + b.particle_count(), a.dim(), std::move(out));
}

ManyBodyOperator tensor_power(const ManyBodyOperator& a, int k) {
  if (k < 1) throw std::invalid_argument("tensor_power: k must be >= 1");
  ManyBodyOperator out = a;
  for (int i = 1; i < k; ++i) out = tensor(out, a);
  return out;
}

namespace {

void check_labels(std::span<const int> labels, int total) {
  std::set<int> seen;
  for (int p : labels) {
    if (p < 1 || p > total) throw std::out_of_range("label out of range");
    if (!seen.insert(p).second) throw std::invalid_argument("label collision");
  }
}

// digit decomposition of a base-d index over k particles, most significant first
std::vector<int> digits_of(std::int64_t idx, int d, int k) {
  std::vector<int> out(k);
  for (int q = k - 1; q >= 0; --q) {
    out[q] = static_cast<int>(idx % d);
    idx /= d;
  }
  return out;
}

}  // namespace

ManyBodyOperator partial_trace(const ManyBodyOperator& a, std::span<const int> traced) {
  const int total = a.particle_count();
  const int d = a.dim();
  check_labels(traced, total);
  if (traced.empty()) return a;
  if (static_cast<int>(traced.size()) == total)
    throw std::invalid_argument("partial_trace: tracing all labels; use trace()");

  std::vector<int> tr(traced.begin(), traced.end());
  std::sort(tr.begin(), tr.end());
  std::vector<int> keep;
  for (int p = 1; p <= total; ++p)
    if (!std::binary_search(tr.begin(), tr.end(), p)) keep.push_back(p);

  const int nk = static_cast<int>(keep.size());
  const int nt = static_cast<int>(tr.size());
  const std::int64_t side_keep = pow_int(d, nk);
  const std::int64_t side_tr = pow_int(d, nt);

  // strides of each label in the full index
  std::vector<std::int64_t> stride(total + 1);
  for (int p = 1; p <= total; ++p) stride[p] = pow_int(d, total - p);

  Matrix out = Matrix::Zero(side_keep, side_keep);
  for (std::int64_t ik = 0; ik < side_keep; ++ik) {
    const auto kd_i = digits_of(ik, d, nk);
    for (std::int64_t jk = 0; jk < side_keep; ++jk) {
      const auto kd_j = digits_of(jk, d, nk);
      std::int64_t base_i = 0, base_j = 0;
      for (int q = 0; q < nk; ++q) {
        base_i += kd_i[q] * stride[keep[q]];
        base_j += kd_j[q] * stride[keep[q]];
      }
      Complex sum = 0.0;
      for (std::int64_t c = 0; c < side_tr; ++c) {
        const auto td = digits_of(c, d, nt);
        std::int64_t off = 0;
        for (int q = 0; q < nt; ++q) off += td[q] * stride[tr[q]];
        sum += a.entries()(base_i + off, base_j + off);
      }
      out(ik, jk) = sum;
    }
  }
  return ManyBodyOperator(nk, d, std::move(out));
}

ManyBodyOperator partial_trace(const ManyBodyOperator& a, std::initializer_list<int> traced) {
  return partial_trace(a, std::span<const int>(traced.begin(), traced.size()));
}

double trace_norm(const ManyBodyOperator& a) {
  if (a.is_hermitian()) {
    Eigen::SelfAdjointEigenSolver<Matrix> es(a.entries(), Eigen::EigenvaluesOnly);
    return es.eigenvalues().cwiseAbs().sum();
  }
  Eigen::JacobiSVD<Matrix> svd(a.entries());
  return svd.singularValues().sum();
}

ManyBodyOperator embed(const ManyBodyOperator& a, std::span<const int> target_labels, int total) {
  const int d = a.dim();
  const int k = a.particle_count();
  if (static_cast<int>(target_labels.size()) != k)
    throw std::invalid_argument("embed: need one target label per particle of a");
  check_labels(target_labels, total);

  std::vector<std::int64_t> stride(total + 1);
  for (int p = 1; p <= total; ++p) stride[p] = pow_int(d, total - p);

  std::vector<int> rest;
  {
    std::set<int> tgt(target_labels.begin(), target_labels.end());
    for (int p = 1; p <= total; ++p)
      if (!tgt.count(p)) rest.push_back(p);
  }
  const int nr = static_cast<int>(rest.size());
  const std::int64_t side_a = a.side();
  const std::int64_t side_r = pow_int(d, nr);
  const std::int64_t side = pow_int(d, total);

  Matrix out = Matrix::Zero(side, side);
  for (std::int64_t ia = 0; ia < side_a; ++ia) {
    const auto di = digits_of(ia, d, k);
    for (std::int64_t ja = 0; ja < side_a; ++ja) {
      const Complex v = a.entries()(ia, ja);
      if (v == Complex(0.0)) continue;
      const auto dj = digits_of(ja, d, k);
      std::int64_t base_i = 0, base_j = 0;
      for (int q = 0; q < k; ++q) {
        base_i += di[q] * stride[target_labels[q]];
        base_j += dj[q] * stride[target_labels[q]];
      }
      for (std::int64_t c = 0; c < side_r; ++c) {
        const auto rd = digits_of(c, d, nr);
        std::int64_t off = 0;
        for (int q = 0; q < nr; ++q) off += rd[q] * stride[rest[q]];
        out(base_i + off, base_j + off) += v;
      }
    }
  }
  return ManyBodyOperator(total, d, std::move(out));
}

ManyBodyOperator embed(const ManyBodyOperator& a, std::initializer_list<int> target_labels, int total) {
  return embed(a, std::span<const int>(target_labels.begin(), target_labels.size()), total);
}

ManyBodyOperator hermitian_exponential(const ManyBodyOperator& h, Complex scale) {
  if (!h.is_hermitian()) throw std::invalid_argument("hermitian_exponential: input is not hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.entries());
  const auto& w = es.eigenvalues();
  const Matrix& v = es.eigenvectors();
  Eigen::VectorXcd phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i) phases(i) = std::exp(scale * w(i));
  Matrix out = v * phases.asDiagonal() * v.adjoint();
  return ManyBodyOperator(h.particle_count(), h.dim(), std::move(out));
}

namespace {
void check_same_shape(const ManyBodyOperator& a, const ManyBodyOperator& b) {
  if (a.particle_count() != b.particle_count() || a.dim() != b.dim())
    throw std::invalid_argument("operator shape mismatch");
}
}  // namespace

ManyBodyOperator operator+(const ManyBodyOperator& a, const ManyBodyOperator& b) {
  check_same_shape(a, b);
  return ManyBodyOperator(a.particle_count(), a.dim(), a.entries() + b.entries());
}

ManyBodyOperator operator-(const ManyBodyOperator& a, const ManyBodyOperator& b) {
  check_same_shape(a, b);
  return ManyBodyOperator(a.particle_count(), a.dim(), a.entries() - b.entries());
}

ManyBodyOperator operator*(Complex c, const ManyBodyOperator& a) {
  return ManyBodyOperator(a.particle_count(), a.dim(), c * a.entries());
}

ManyBodyOperator operator*(double c, const ManyBodyOperator& a) {
  return ManyBodyOperator(a.particle_count(), a.dim(), c * a.entries());
}

ManyBodyOperator adjoint(const ManyBodyOperator& a) {
  return ManyBodyOperator(a.particle_count(), a.dim(), a.entries().adjoint());
}

double max_abs(const ManyBodyOperator& a) { return a.entries().cwiseAbs().maxCoeff(); }

double max_abs_diff(const ManyBodyOperator& a, const ManyBodyOperator& b) {
  check_same_shape(a, b);
  return (a.entries() - b.entries()).cwiseAbs().maxCoeff();
}

}  // namespace qkin
