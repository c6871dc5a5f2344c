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

#ifndef SDPI_SIZE_BOUNDS_H
#define SDPI_SIZE_BOUNDS_H

// Information decay and minimum-size bounds for noisy threshold networks.
// Throughout, a = 4 xi - 4 xi^2 and each layer of width n contracts mutual
// information by at most 1 - a^n.

#include <optional>
#include <span>
#include <vector>

namespace sdpi {

/// h_x * prod_l (1 - a^{n_l}): upper bound on I(X; Y_out) for a network with
/// the given layer widths (output layer included).
double theorem2_bound(std::span<const int> widths, double xi, double h_x);

/// Minimum mutual information, in bits, that lets one bit be decoded with
/// error at most delta: 1 + delta log2 delta + (1 - delta) log2 (1 - delta).
/// delta must lie in [0, 0.5).
double delta_capacity(double delta);

/// (delta, Delta(delta)).
struct ReliabilitySpec {
  double delta = 0.0;
  double capacity_delta = 1.0;
  static ReliabilitySpec from_delta(double delta);
};

struct Feasibility {
  bool feasible = false;
  double lhs = 0.0;       ///< information surviving to the readout
  double capacity = 0.0;  ///< Delta(delta)
  double margin = 0.0;    ///< lhs - capacity
};

/// Necessary condition for delta-reliable computation of a non-constant
/// function. `hidden_widths` are n_1..n_{L-1}; the single output neuron's
/// factor (1 - a) is appended here. With `feature_extractor` set, the
/// widths are all L layers and no output-neuron factor is applied.
Feasibility feasibility_check(std::span<const int> hidden_widths, double xi, double delta,
                              bool feature_extractor = false);

/// Lower bound on the total number of hidden noisy neurons at depth L.
/// `feasible == false` means no width is enough (Delta >= 1 - a): the
/// bound is infinite. L = 1 has no hidden layer, so n_s is 0 and only the
/// feasibility predicate 1 - a >= Delta carries information.
struct MinNeurons {
  bool feasible = false;
  double n_s = 0.0;
};

/// N_s = (L-1) log(1 - (Delta/(1-a))^{1/(L-1)}) / log(a). Requires
/// 0 <= xi < 0.5, 0 < delta < 0.5 and L >= 1.
MinNeurons min_neurons_lower_bound(double xi, double delta, int layers);

struct AmGmBound {
  double product = 0.0;  ///< prod_l (1 - a^{n_l})
  double bound = 0.0;    ///< (1 - a^{mean n})^L
  bool equal_widths = false;
};

/// Both sides of prod (1 - a^{n_l}) <= (1 - a^{mean})^L for 0 <= a <= 1.
AmGmBound amgm_product_bound(double a, std::span<const int> widths);

/// (n/2)^{1/(2(d-1))}: threshold-gate lower bound for n-input parity at
/// depth d. Requires n >= 2 and d >= 2.
double parity_size_complexity(double n, int depth);

enum class Binding { kExpressibility, kNoise };

struct SizeBoundResult {
  int depth = 0;
  double expressibility_bound = 0.0;  ///< Omega(n, d)
  /// N_s(xi, delta, d) + 1, counting the output neuron; infinite when the
  /// noise level makes depth d infeasible.
  double noise_bound = 0.0;
  Binding binding = Binding::kExpressibility;
  double value() const;
};

struct DepthTradeoff {
  std::vector<SizeBoundResult> rows;  ///< depths 2..max_depth
  int best_depth = 0;
  double best_value = 0.0;
};

/// min over d in [2, max_depth] of max(Omega(n, d), N_s(xi, delta, d) + 1)
/// for parity. Ties go to the smaller depth. Throws std::domain_error if
/// every depth is infeasible.
DepthTradeoff optimal_depth_tradeoff(double n, double xi, double delta, int max_depth);

}  // namespace sdpi

#endif  // SDPI_SIZE_BOUNDS_H
