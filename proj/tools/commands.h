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

#ifndef SDPI_TOOLS_COMMANDS_H
#define SDPI_TOOLS_COMMANDS_H

#include <iosfwd>
#include <string>
#include <vector>

namespace sdpi::cli {

enum ExitCode : int {
  kOk = 0,
  kInfeasible = 1,  ///< parameters are valid but the requested quantity does not exist
  kInputError = 2,  ///< bad flags, unreadable or invalid files, unknown names
};

/// Runs the `sdpi` command line with `args` (program name excluded). Data
/// goes to `out` unless --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sdpi::cli

#endif  // SDPI_TOOLS_COMMANDS_H
