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

#ifndef QKIN_PARALLEL_HPP
#define QKIN_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace qkin {

/// Runs fn(i) for i in [0, count) on up to `workers` threads. Tasks write
/// into caller-owned slots indexed by i, so results are assembled in task
/// order no matter which worker finished first (deterministic reduction).
/// workers <= 1 runs inline. Exceptions from tasks are rethrown.
void parallel_indexed(std::size_t count, int workers, const std::function<void(std::size_t)>& fn);

}  // namespace qkin

#endif  // QKIN_PARALLEL_HPP
