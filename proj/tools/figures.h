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

#ifndef SDPI_TOOLS_FIGURES_H
#define SDPI_TOOLS_FIGURES_H

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace sdpi::cli {

using Cell = std::variant<double, std::int64_t, std::string>;

/// Tabular command output. Row order is fixed by the grid that produced it.
struct Dataset {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  /// Extra "# key: value" lines emitted after the invocation header.
  std::vector<std::string> notes;
  /// Non-fatal diagnostics, written to stderr.
  std::vector<std::string> warnings;
};

/// 9 significant digits; non-finite values print as inf / -inf / nan.
std::string format_number(double v);

/// "# invocation: <invocation>; seed=<seed>", notes, the column header, rows.
std::string to_csv(const Dataset& d, std::string_view invocation, std::uint64_t seed);
std::string to_json(const Dataset& d, std::string_view invocation, std::uint64_t seed);

/// Grid syntax: "start:stop:step" (inclusive, generated as start + i*step)
/// or a comma-separated list. Throws std::invalid_argument on bad input.
std::vector<double> parse_grid(std::string_view spec);
std::vector<int> parse_int_list(std::string_view spec);

/// Evans-Schulman estimate vs the tensorized bound for n neurons:
/// columns xi, evans_schulman (raw n*eta), ours (1-(1-eta)^n).
Dataset figure2(const std::vector<double>& xi_grid, int n);

/// Correlated vs independent layer noise at fixed xi2 and n:
/// columns xi1, eta_ind, eta_wc_leading, eta_wc_exact.
Dataset figure3(const std::vector<double>& xi1_grid, double xi2, int n);

/// Minimum hidden-neuron count: columns xi, delta, L, N_s ("inf" when infeasible).
Dataset figure5(const std::vector<double>& xi_grid, const std::vector<double>& deltas,
                const std::vector<int>& layers);

/// Depth tradeoff for parity: columns d, omega, ns_plus_1, max; summary note
/// with the optimal depth and value.
Dataset figure6(double n, double xi, double delta, int max_depth);

/// Overhead lower bound: columns T, delta, xi, n_lower.
Dataset figure8(const std::vector<int>& t_grid, const std::vector<std::pair<double, double>>& pairs);

/// gnuplot script that plots `data_file` for figure `number`.
std::string gnuplot_script(int number, std::string_view data_file);

}  // namespace sdpi::cli

#endif  // SDPI_TOOLS_FIGURES_H
