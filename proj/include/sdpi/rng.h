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

#ifndef SDPI_RNG_H
#define SDPI_RNG_H

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace sdpi {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Independent generator for work item `index` under `seed`. Every Monte
/// Carlo loop draws item i from stream(seed, i) so results do not depend on
/// evaluation order.
///
/// Draws below use raw 64-bit output instead of std:: distributions, whose
/// algorithms are implementation-defined; this keeps output bytes identical
/// across standard libraries.
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t index)
      : engine_(splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL))) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform on [0, 1) with 53 bits of resolution.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform() < p; }

  /// Standard exponential.
  double exponential() { return -std::log1p(-uniform()); }

  /// Flat Dirichlet sample: independent exponentials normalized to sum 1.
  std::vector<double> simplex(std::size_t n) {
    std::vector<double> p(n);
    double sum = 0.0;
    for (auto& v : p) {
      v = exponential();
      sum += v;
    }
    if (sum <= 0.0) {
      // All draws were exactly zero; vanishingly unlikely but keep the output valid.
      for (auto& v : p) v = 1.0 / static_cast<double>(n);
      return p;
    }
    for (auto& v : p) v /= sum;
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sdpi

#endif  // SDPI_RNG_H
