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

#include "sdpi/contraction.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "json.hpp"

namespace sdpi {

namespace {

constexpr double kTieTolerance = 1e-13;

double clamp_unit(double v) { return std::clamp(v, 0.0, 1.0); }

void check_cap(int n, int cap) {
  if (n < 1) {
    throw std::invalid_argument("layer width must be positive");
  }
  if (n > cap) {
    throw std::invalid_argument("layer width " + std::to_string(n) + " exceeds cap " +
                                std::to_string(cap));
  }
}

// Builds the 2^n x 2^n channel whose entry depends on the Hamming distance
// only, from the per-distance values.
Channel distance_channel(int n, const std::vector<double>& by_distance) {
  const std::size_t states = std::size_t{1} << n;
  std::vector<double> data(states * states);
  for (std::size_t r = 0; r < states; ++r) {
    for (std::size_t s = 0; s < states; ++s) {
      data[r * states + s] = by_distance[hamming_distance(r, s)];
    }
  }
  return Channel(states, states, std::move(data));
}

}  // namespace

std::string ContractionBound::to_json() const {
  return nlohmann::json{{"eta", eta}, {"witness", {k, l}}, {"method", method}}.dump();
}

int hamming_distance(std::uint64_t a, std::uint64_t b) { return std::popcount(a ^ b); }

double bhattacharyya_sum(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("bhattacharyya_sum: rows of different length");
  }
  double s = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    s += std::sqrt(a[j] * b[j]);
  }
  return s;
}

ContractionBound theorem1_bound(const Channel& c) {
  if (c.n_inputs() < 2) {
    throw std::invalid_argument("contraction bound needs at least two channel inputs");
  }
  ContractionBound best;
  best.method = "pair-scan";
  bool first = true;
  for (std::size_t k = 0; k + 1 < c.n_inputs(); ++k) {
    for (std::size_t l = k + 1; l < c.n_inputs(); ++l) {
      const double b = bhattacharyya_sum(c.row(k), c.row(l));
      if (first || b < best.bhattacharyya - kTieTolerance) {
        best.bhattacharyya = b;
        best.k = k;
        best.l = l;
        first = false;
      }
    }
  }
  best.eta = clamp_unit(1.0 - best.bhattacharyya * best.bhattacharyya);
  return best;
}

ContractionBound theorem1_bound_hamming(const Channel& c, int bits) {
  if (bits < 1 || bits > 30) {
    throw std::invalid_argument("theorem1_bound_hamming: bit count out of range");
  }
  const std::size_t states = std::size_t{1} << bits;
  if (c.n_inputs() != states || c.m_outputs() != states) {
    throw std::invalid_argument("theorem1_bound_hamming: channel is not 2^bits x 2^bits");
  }
  for (std::size_t r = 0; r < states; ++r) {
    for (std::size_t s = 0; s < states; ++s) {
      if (std::abs(c(r, s) - c(0, r ^ s)) > 1e-12) {
        throw std::invalid_argument(
            "theorem1_bound_hamming: entries do not depend on Hamming distance only");
      }
    }
  }
  // A channel that is XOR-invariant but not permutation-invariant would pass
  // the check above yet break the distance-class reduction.
  for (std::size_t s = 0; s < states; ++s) {
    const std::size_t canonical = (std::size_t{1} << std::popcount(s)) - 1;
    if (std::abs(c(0, s) - c(0, canonical)) > 1e-12) {
      throw std::invalid_argument(
          "theorem1_bound_hamming: entries do not depend on Hamming distance only");
    }
  }
  ContractionBound best;
  best.method = "hamming-classes";
  for (int d = 1; d <= bits; ++d) {
    const std::size_t partner = (std::size_t{1} << d) - 1;
    const double b = bhattacharyya_sum(c.row(0), c.row(partner));
    if (d == 1 || b < best.bhattacharyya - kTieTolerance) {
      best.bhattacharyya = b;
      best.k = 0;
      best.l = partner;
    }
  }
  best.eta = clamp_unit(1.0 - best.bhattacharyya * best.bhattacharyya);
  return best;
}

void LayerNoiseSpec::validate() const {
  if (!(xi >= 0.0 && xi < 0.5)) {
    throw std::invalid_argument("flip probability xi must lie in [0, 0.5)");
  }
  if (n < 1) {
    throw std::invalid_argument("layer width must be positive");
  }
}

void CorrelatedNoiseSpec::validate() const {
  if (!(xi1 >= 0.0 && xi1 <= 1.0)) {
    throw std::invalid_argument("shared flip probability xi1 must lie in [0, 1]");
  }
  if (!(xi2 >= 0.0 && xi2 < 0.5)) {
    throw std::invalid_argument("independent flip probability xi2 must lie in [0, 0.5)");
  }
  if (n < 1) {
    throw std::invalid_argument("layer width must be positive");
  }
}

double bsc_affinity(double xi) { return 4.0 * xi - 4.0 * xi * xi; }

double independent_layer_bound(const LayerNoiseSpec& s) {
  s.validate();
  return 1.0 - std::pow(bsc_affinity(s.xi), s.n);
}

Channel independent_layer_channel(const LayerNoiseSpec& s, int cap) {
  s.validate();
  check_cap(s.n, cap);
  std::vector<double> by_distance(s.n + 1);
  for (int d = 0; d <= s.n; ++d) {
    by_distance[d] = std::pow(s.xi, d) * std::pow(1.0 - s.xi, s.n - d);
  }
  return distance_channel(s.n, by_distance);
}

Channel correlated_layer_channel(const CorrelatedNoiseSpec& s, int cap) {
  s.validate();
  check_cap(s.n, cap);
  std::vector<double> by_distance(s.n + 1);
  for (int d = 0; d <= s.n; ++d) {
    by_distance[d] = (1.0 - s.xi1) * std::pow(1.0 - s.xi2, s.n - d) * std::pow(s.xi2, d) +
                     s.xi1 * std::pow(s.xi2, s.n - d) * std::pow(1.0 - s.xi2, d);
  }
  return distance_channel(s.n, by_distance);
}

double g_function(double xi2, int n) {
  if (n < 1) throw std::invalid_argument("g_function: n must be positive");
  const double a = 4.0 * xi2 * xi2 - 4.0 * xi2 + 2.0;
  const double b = bsc_affinity(xi2);
  return 2.0 * (std::pow(a, n) - std::pow(b, n));
}

double g_function_factored(double xi2, int n) {
  if (n < 1) throw std::invalid_argument("g_function_factored: n must be positive");
  const double a = 4.0 * xi2 * xi2 - 4.0 * xi2 + 2.0;
  const double b = bsc_affinity(xi2);
  double sum = 0.0;
  for (int i = 1; i <= n; ++i) {
    sum += std::pow(a, n - i) * std::pow(b, i - 1);
  }
  return 4.0 * (4.0 * xi2 * xi2 - 4.0 * xi2 + 1.0) * sum;
}

double g_tilde(double xi2, int n) {
  if (n < 1) throw std::invalid_argument("g_tilde: n must be positive");
  const double t = 2.0 * xi2 - 1.0;
  return 4.0 * n * t * t * std::pow(bsc_affinity(xi2), n - 1);
}

double correlated_layer_bound_leading(const CorrelatedNoiseSpec& s) {
  s.validate();
  return 1.0 - (std::pow(bsc_affinity(s.xi2), s.n) + g_function(s.xi2, s.n) * s.xi1);
}

double matched_flip_probability(double xi1, double xi2) {
  return xi1 * (1.0 - xi2) + (1.0 - xi1) * xi2;
}

bool correlated_term_ordering_preserved(const CorrelatedNoiseSpec& s) {
  s.validate();
  double prev = 0.0;
  for (int d = 0; d <= s.n; ++d) {
    const double v = (1.0 - s.xi1) * std::pow(1.0 - s.xi2, s.n - d) * std::pow(s.xi2, d) +
                     s.xi1 * std::pow(s.xi2, s.n - d) * std::pow(1.0 - s.xi2, d);
    if (d > 0 && !(v < prev)) return false;
    prev = v;
  }
  return true;
}

double evans_schulman_raw(double eta_single, int n) {
  if (!(eta_single >= 0.0 && eta_single <= 1.0)) {
    throw std::invalid_argument("single-neuron contraction must lie in [0, 1]");
  }
  if (n < 1) throw std::invalid_argument("neuron count must be positive");
  return n * eta_single;
}

double evans_schulman_bound(double eta_single, int n) {
  return std::min(evans_schulman_raw(eta_single, n), 1.0);
}

}  // namespace sdpi
