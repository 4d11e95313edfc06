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

#ifndef QKIN_RUNNER_HPP
#define QKIN_RUNNER_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "qkin/config.hpp"

namespace qkin {

struct RunResult {
  int exit_code = 0;
  std::string report_text;            // serialized report (csv or json)
  std::vector<std::string> warnings;  // diagnostics; never affect exit_code
};

/// Dispatches the configured command and serializes the report. Deterministic
/// byte-for-byte for a fixed config, for any worker count. Throws ConfigError
/// or std::exception subclasses on hard failures.
RunResult execute(const RunConfig& cfg);

/// execute() + write the report to cfg.output_path; warnings go to `diag`.
/// Returns the exit status.
int run_and_write(const RunConfig& cfg, std::ostream& diag);

}  // namespace qkin

#endif  // QKIN_RUNNER_HPP
