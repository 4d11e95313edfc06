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

#ifndef QKIN_COMBINATORICS_HPP
#define QKIN_COMBINATORICS_HPP

#include <string>
#include <vector>

namespace qkin {

/// One element of a cumulant ground set: either a joint cluster of particle
/// labels (treated as a single element) or a single particle label.
class ClusterElement {
 public:
  static ClusterElement single(int label);
  static ClusterElement cluster(std::vector<int> labels);

  bool is_cluster() const { return is_cluster_; }
  const std::vector<int>& labels() const { return labels_; }

 private:
  ClusterElement(bool is_cluster, std::vector<int> labels);
  bool is_cluster_;
  std::vector<int> labels_;
};

/// Checks that cluster label sets are nonempty and disjoint from all other
/// elements of the same ground set; throws on violation.
void validate_ground_set(const std::vector<ClusterElement>& ground);

/// A set partition given as blocks of indices into the ground set. Blocks and
/// the indices inside them are ascending; the partition sequence follows the
/// lexicographic order of restricted-growth strings.
using SetPartition = std::vector<std::vector<int>>;

/// All set partitions of the ground set, each exactly once. Ground sets are
/// capped at 8 elements.
std::vector<SetPartition> partitions(const std::vector<ClusterElement>& ground);

/// A dissection of the linearly ordered set (1..n): consecutive, nonempty
/// blocks covering it, listed left to right. Positions are 1-based.
struct Dissection {
  std::vector<std::vector<int>> parts;
  int part_count() const { return static_cast<int>(parts.size()); }
};

/// All 2^{n-1} dissections of (1..n), ordered by ascending cut-point bitmask
/// (bit g set = cut after position g+1). n is capped at 16.
std::vector<Dissection> dissections(int n);

/// Subsequence of dissections(n) with part count <= max_parts.
std::vector<Dissection> dissections_bounded(int n, int max_parts);

/// All ordered tuples (i_1..i_k) of distinct values in 1..m, lexicographic.
/// k > m yields the empty sequence (empty-sum convention).
std::vector<std::vector<int>> injective_tuples(int k, int m);

/// All tuples (n_1..n_k) with n_j >= 1 and sum <= n, in the nested-loop order
/// n_1 = 1..n, n_2 = 1..n-n_1, ... . k = 0 yields the single empty tuple.
std::vector<std::vector<int>> bounded_compositions(int n, int k);

/// Canonical text form of an enumeration, used by the determinism checks.
std::string serialize_dissections(const std::vector<Dissection>& ds);
std::string serialize_partitions(const std::vector<SetPartition>& ps);

}  // namespace qkin

#endif  // QKIN_COMBINATORICS_HPP
