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

#include "qkin/combinatorics.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qkin {

namespace {
constexpr int kMaxPartitionElements = 8;
constexpr int kMaxDissectionElements = 16;
}  // namespace

ClusterElement::ClusterElement(bool is_cluster, std::vector<int> labels)
    : is_cluster_(is_cluster), labels_(std::move(labels)) {}

ClusterElement ClusterElement::single(int label) { return ClusterElement(false, {label}); }

ClusterElement ClusterElement::cluster(std::vector<int> labels) {
  if (labels.empty()) throw std::invalid_argument("ClusterElement: cluster label set must be nonempty");
  return ClusterElement(true, std::move(labels));
}

void validate_ground_set(const std::vector<ClusterElement>& ground) {
  std::set<int> seen;
  for (const auto& e : ground) {
    if (e.labels().empty()) throw std::invalid_argument("ground set: empty element");
    for (int l : e.labels())
      if (!seen.insert(l).second) throw std::invalid_argument("ground set: label appears in two elements");
  }
}

std::vector<SetPartition> partitions(const std::vector<ClusterElement>& ground) {
  if (ground.empty()) throw std::invalid_argument("partitions: ground set must be nonempty");
  if (static_cast<int>(ground.size()) > kMaxPartitionElements)
    throw std::length_error("partitions: ground set exceeds the 8-element cap");
  validate_ground_set(ground);

  const int n = static_cast<int>(ground.size());
  std::vector<SetPartition> out;
  std::vector<int> rgs(n, 0);
  // lexicographic enumeration of restricted-growth strings
  auto emit = [&] {
    int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    SetPartition p(nblocks);
    for (int i = 0; i < n; ++i) p[rgs[i]].push_back(i);
    out.push_back(std::move(p));
  };
  // iterative recursion over position i with running max
  std::vector<int> maxv(n, 0);
  int i = 1;
  if (n == 1) {
    emit();
    return out;
  }
  rgs[1] = -1;
  while (i >= 1) {
    ++rgs[i];
    if (rgs[i] > maxv[i - 1] + 1) {
      rgs[i] = -1;
      --i;
      continue;
    }
    maxv[i] = std::max(maxv[i - 1], rgs[i]);
    if (i == n - 1) {
      emit();
    } else {
      ++i;
      rgs[i] = -1;
    }
  }
  return out;
}

std::vector<Dissection> dissections(int n) {
  if (n < 1) throw std::invalid_argument("dissections: n must be >= 1");
  if (n > kMaxDissectionElements) throw std::length_error("dissections: n exceeds the 16-element cap");
  std::vector<Dissection> out;
  out.reserve(std::size_t(1) << (n - 1));
  for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << (n - 1)); ++mask) {
    Dissection d;
    std::vector<int> cur{1};
    for (int g = 0; g < n - 1; ++g) {
      if ((mask >> g) & 1u) {
        d.parts.push_back(cur);
        cur.clear();
      }
      cur.push_back(g + 2);
    }
    d.parts.push_back(cur);
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<Dissection> dissections_bounded(int n, int max_parts) {
  if (max_parts < 1) throw std::invalid_argument("dissections_bounded: max_parts must be >= 1");
  std::vector<Dissection> out;
  for (auto& d : dissections(n))
    if (d.part_count() <= max_parts) out.push_back(std::move(d));
  return out;
}

std::vector<std::vector<int>> injective_tuples(int k, int m) {
  if (k < 0 || m < 0) throw std::invalid_argument("injective_tuples: negative arguments");
  std::vector<std::vector<int>> out;
  if (k > m) return out;  // empty sum
  if (k == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> tup;
  std::vector<bool> used(m + 1, false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(tup.size()) == k) {
      out.push_back(tup);
      return;
    }
    for (int v = 1; v <= m; ++v) {
      if (used[v]) continue;
      used[v] = true;
      tup.push_back(v);
      self(self);
      tup.pop_back();
      used[v] = false;
    }
  };
  rec(rec);
  return out;
}

std::vector<std::vector<int>> bounded_compositions(int n, int k) {
  if (k < 0) throw std::invalid_argument("bounded_compositions: k must be >= 0");
  std::vector<std::vector<int>> out;
  if (k == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> tup;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (static_cast<int>(tup.size()) == k) {
      out.push_back(tup);
      return;
    }
    for (int v = 1; v <= remaining; ++v) {
      tup.push_back(v);
      self(self, remaining - v);
      tup.pop_back();
    }
  };
  rec(rec, n);
  return out;
}

std::string serialize_dissections(const std::vector<Dissection>& ds) {
  std::ostringstream os;
  for (const auto& d : ds) {
    for (const auto& part : d.parts) {
      os << '(';
      for (std::size_t i = 0; i < part.size(); ++i) {
        if (i) os << ',';
        os << part[i];
      }
      os << ')';
    }
    os << ';';
  }
  return os.str();
}

std::string serialize_partitions(const std::vector<SetPartition>& ps) {
  std::ostringstream os;
  for (const auto& p : ps) {
    for (const auto& block : p) {
      os << '{';
      for (std::size_t i = 0; i < block.size(); ++i) {
        if (i) os << ',';
        os << block[i];
      }
      os << '}';
    }
    os << ';';
  }
  return os.str();
}

}  // namespace qkin
