// Copyright 2026 The sdpi Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SDPI_TOOLS_VERIFY_H
#define SDPI_TOOLS_VERIFY_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace sdpi::cli {

struct SuiteResult {
  std::string suite;
  bool pass = true;
  std::size_t cases = 0;
  /// Largest violation (or residual) seen; what "worst" means is per suite.
  double worst = 0.0;
  /// First failing case, null when everything passed.
  nlohmann::json counterexample;

  nlohmann::json to_json() const;
};

/// sdpi-fuzz, appendix-identity, prop1-equality, memory-sandwich,
/// theorem2-networks.
const std::vector<std::string>& suite_names();

bool is_suite(const std::string& name);

/// Runs one suite. `budget` is the number of random cases; 0 picks the
/// suite's default. Throws std::invalid_argument for unknown names.
SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t budget);

}  // namespace sdpi::cli

#endif  // SDPI_TOOLS_VERIFY_H
