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

#ifndef SDPI_CONTRACTION_H
#define SDPI_CONTRACTION_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

#include "sdpi/info.h"

namespace sdpi {

/// Upper bound on I(X;Z)/I(X;Y) for any chain X -> Y -> Z through a fixed
/// channel Y -> Z:
///
///   eta = 1 - min_{k != l} (sum_j sqrt(a_kj a_lj))^2
///
/// (k, l) is the row pair attaining the minimum Bhattacharyya sum.
struct ContractionBound {
  double eta = 0.0;
  std::size_t k = 0;
  std::size_t l = 0;
  double bhattacharyya = 1.0;
  std::string method;

  /// {"eta": ..., "witness": [k, l], "method": ...}
  std::string to_json() const;
};

double bhattacharyya_sum(std::span<const double> a, std::span<const double> b);

/// Brute-force O(n^2 m) scan over unordered row pairs. Near-ties (within
/// 1e-13) keep the lexicographically smallest pair. Throws
/// std::invalid_argument for channels with fewer than two inputs.
ContractionBound theorem1_bound(const Channel& c);

/// Same bound for a 2^bits x 2^bits channel whose entry (r, s) depends only
/// on the Hamming distance between r and s. Then the Bhattacharyya sum of
/// rows (r, r') depends only on their distance d, so scanning the pairs
/// (0, 2^d - 1) for d = 1..bits suffices. Throws if the channel does not
/// have that structure (checked to 1e-12).
ContractionBound theorem1_bound_hamming(const Channel& c, int bits);

inline constexpr int kDefaultLayerCap = 12;

/// Layer of n neurons that flip independently with probability xi.
struct LayerNoiseSpec {
  double xi = 0.0;
  int n = 1;
  void validate() const;
};

/// Layer noise with a shared flip of all n outputs (probability xi1) followed
/// by independent per-neuron flips (probability xi2). Intended regime is
/// xi1 << 1 and xi1 << xi2.
struct CorrelatedNoiseSpec {
  double xi1 = 0.0;
  double xi2 = 0.0;
  int n = 1;
  void validate() const;
};

/// 4 xi (1 - xi), the squared Bhattacharyya coefficient of BSC(xi).
double bsc_affinity(double xi);

/// 1 - (4 xi - 4 xi^2)^n.
double independent_layer_bound(const LayerNoiseSpec& s);

/// The 2^n x 2^n channel BSC(xi)^{(x) n}. Throws std::invalid_argument if
/// n exceeds `cap`.
Channel independent_layer_channel(const LayerNoiseSpec& s, int cap = kDefaultLayerCap);

/// Entry (r, s) = (1-xi1)(1-xi2)^{n-d} xi2^d + xi1 xi2^{n-d} (1-xi2)^d with
/// d the Hamming distance of r and s.
Channel correlated_layer_channel(const CorrelatedNoiseSpec& s, int cap = kDefaultLayerCap);

/// Leading order in xi1 of the correlated-noise bound:
///   1 - [(4 xi2 - 4 xi2^2)^n + g(xi2, n) xi1].
/// Only an approximation; the exact value is theorem1_bound of
/// correlated_layer_channel, and the two differ at O(xi1^2).
double correlated_layer_bound_leading(const CorrelatedNoiseSpec& s);

/// g(xi2, n) = 2[(4 xi2^2 - 4 xi2 + 2)^n - (4 xi2 - 4 xi2^2)^n].
double g_function(double xi2, int n);

/// g written as 4 (2 xi2 - 1)^2 sum_{i=1}^n A^{n-i} B^{i-1} with
/// A = 4 xi2^2 - 4 xi2 + 2, B = 4 xi2 - 4 xi2^2. Equal to g_function.
double g_function_factored(double xi2, int n);

/// 4 n (2 xi2 - 1)^2 (4 xi2 - 4 xi2^2)^{n-1}: the first-order coefficient of
/// the independent bound at matched per-neuron noise. Never exceeds g.
double g_tilde(double xi2, int n);

/// Per-neuron flip probability of the correlated model: xi1(1-xi2) + (1-xi1)xi2.
double matched_flip_probability(double xi1, double xi2);

/// Whether the distinct entries of a correlated-noise row, indexed by
/// Hamming distance d = 0..n, are still strictly decreasing in d. The
/// leading-order bound relies on this ordering surviving the shared noise.
bool correlated_term_ordering_preserved(const CorrelatedNoiseSpec& s);

/// Raw n * eta, the end-to-end estimate from per-neuron contraction eta.
double evans_schulman_raw(double eta_single, int n);

/// min(n * eta, 1).
double evans_schulman_bound(double eta_single, int n);

int hamming_distance(std::uint64_t a, std::uint64_t b);

}  // namespace sdpi

#endif  // SDPI_CONTRACTION_H
