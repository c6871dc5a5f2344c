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

#include "sdpi/size_bounds.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sdpi/contraction.h"

namespace sdpi {

namespace {

void check_xi(double xi) {
  if (!(xi >= 0.0 && xi < 0.5)) {
    throw std::invalid_argument("flip probability xi must lie in [0, 0.5)");
  }
}

void check_widths(std::span<const int> widths) {
  for (int w : widths) {
    if (w < 1) throw std::invalid_argument("layer widths must be positive");
  }
}

}  // namespace

double theorem2_bound(std::span<const int> widths, double xi, double h_x) {
  check_xi(xi);
  if (widths.empty()) throw std::invalid_argument("theorem2_bound: need at least one layer");
  check_widths(widths);
  if (!(h_x >= 0.0)) throw std::invalid_argument("theorem2_bound: H(X) must be non-negative");
  const double a = bsc_affinity(xi);
  double bound = h_x;
  for (int w : widths) bound *= 1.0 - std::pow(a, w);
  return bound;
}

double delta_capacity(double delta) {
  if (!(delta >= 0.0 && delta < 0.5)) {
    throw std::invalid_argument("reliability delta must lie in [0, 0.5)");
  }
  if (delta == 0.0) return 1.0;
  return 1.0 + delta * std::log2(delta) + (1.0 - delta) * std::log2(1.0 - delta);
}

ReliabilitySpec ReliabilitySpec::from_delta(double delta) {
  return ReliabilitySpec{delta, delta_capacity(delta)};
}

Feasibility feasibility_check(std::span<const int> hidden_widths, double xi, double delta,
                              bool feature_extractor) {
  check_xi(xi);
  check_widths(hidden_widths);
  if (feature_extractor && hidden_widths.empty()) {
    throw std::invalid_argument("feature-extractor readout needs at least one layer");
  }
  const double a = bsc_affinity(xi);
  double lhs = 1.0;
  for (int w : hidden_widths) lhs *= 1.0 - std::pow(a, w);
  if (!feature_extractor) lhs *= 1.0 - a;
  Feasibility f;
  f.lhs = lhs;
  f.capacity = delta_capacity(delta);
  f.margin = lhs - f.capacity;
  f.feasible = lhs >= f.capacity;
  return f;
}

MinNeurons min_neurons_lower_bound(double xi, double delta, int layers) {
  check_xi(xi);
  if (!(delta > 0.0 && delta < 0.5)) {
    throw std::invalid_argument("reliability delta must lie in (0, 0.5)");
  }
  if (layers < 1) {
    throw std::invalid_argument("min_neurons_lower_bound: need at least one layer");
  }
  const double a = bsc_affinity(xi);
  const double cap = delta_capacity(delta);
  const double ratio = cap / (1.0 - a);
  if (ratio >= 1.0) {
    return {false, std::numeric_limits<double>::infinity()};
  }
  if (layers == 1 || a == 0.0) {
    return {true, 0.0};
  }
  const double k = layers - 1;
  return {true, k * std::log1p(-std::pow(ratio, 1.0 / k)) / std::log(a)};
}

AmGmBound amgm_product_bound(double a, std::span<const int> widths) {
  if (!(a >= 0.0 && a <= 1.0)) throw std::invalid_argument("amgm_product_bound: a must lie in [0, 1]");
  if (widths.empty()) throw std::invalid_argument("amgm_product_bound: need at least one width");
  check_widths(widths);
  AmGmBound r;
  r.product = 1.0;
  for (int w : widths) r.product *= 1.0 - std::pow(a, w);
  const double mean = std::accumulate(widths.begin(), widths.end(), 0.0) /
                      static_cast<double>(widths.size());
  r.equal_widths = std::all_of(widths.begin(), widths.end(),
                               [&](int w) { return w == widths.front(); });
  // With equal widths the mean is exact and both sides are the same product.
  r.bound = r.equal_widths ? r.product
                           : std::pow(1.0 - std::pow(a, mean), static_cast<double>(widths.size()));
  return r;
}

double parity_size_complexity(double n, int depth) {
  if (!(n >= 2.0)) throw std::invalid_argument("parity_size_complexity: need n >= 2");
  if (depth < 2) throw std::invalid_argument("parity_size_complexity: need depth >= 2");
  return std::pow(n / 2.0, 1.0 / (2.0 * (depth - 1)));
}

double SizeBoundResult::value() const { return std::max(expressibility_bound, noise_bound); }

DepthTradeoff optimal_depth_tradeoff(double n, double xi, double delta, int max_depth) {
  if (max_depth < 2) throw std::invalid_argument("optimal_depth_tradeoff: need max depth >= 2");
  DepthTradeoff out;
  bool found = false;
  for (int d = 2; d <= max_depth; ++d) {
    SizeBoundResult row;
    row.depth = d;
    row.expressibility_bound = parity_size_complexity(n, d);
    const MinNeurons ns = min_neurons_lower_bound(xi, delta, d);
    row.noise_bound = ns.feasible ? ns.n_s + 1.0 : std::numeric_limits<double>::infinity();
    row.binding = row.noise_bound > row.expressibility_bound ? Binding::kNoise
                                                             : Binding::kExpressibility;
    if (ns.feasible && (!found || row.value() < out.best_value)) {
      out.best_depth = d;
      out.best_value = row.value();
      found = true;
    }
    out.rows.push_back(row);
  }
  if (!found) {
    throw std::domain_error("optimal_depth_tradeoff: noise level infeasible at every depth");
  }
  return out;
}

}  // namespace sdpi
