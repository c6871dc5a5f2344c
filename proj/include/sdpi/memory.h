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

#ifndef SDPI_MEMORY_H
#define SDPI_MEMORY_H

// Bounds for a memory that stores one logical bit in n physical bits, each
// flipping with probability xi per refresh interval. Time is counted in
// refresh intervals; the interval length itself never enters a formula.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sdpi {

struct MemorySpec {
  int n = 1;
  double xi = 0.0;
  double delta = 0.0;
  int T = 1;
  void validate() const;
};

/// Smallest n compatible with retrieving the bit delta-reliably after T
/// intervals, under any refresh rule: log(1 - Delta^{1/T}) / log(4xi - 4xi^2).
double overhead_lower_bound(double delta, int T, double xi);

struct RelaxationUpper {
  double bound = 0.0;       ///< log Delta / log(1 - a^n)
  double asymptotic = 0.0;  ///< log(1/Delta) exp(n log(1/a)), the large-n form
};

/// Upper bound on the relaxation time. `n` may be fractional so that the
/// relation with overhead_lower_bound can be inverted exactly.
RelaxationUpper relaxation_upper_bound(double n, double xi, double delta);

/// Probability that one interval defeats majority vote: more than half the
/// bits flip, with exact ties (even n) counted as failures.
double catastrophic_prob_exact(int n, double xi);

/// Chernoff-Hoeffding bound (4 xi (1 - xi))^{n/2} on the same probability.
double catastrophic_prob_chernoff(int n, double xi);

struct RepetitionRelaxation {
  double p_e = 0.0;
  /// log(1 - 2 delta) / log(1 - 2 p_e); +inf when it diverges (delta = 0.5).
  double time = 0.0;
  bool diverges = false;
  /// Same formula with the Chernoff bound in place of p_e. A lower bound on
  /// `time`; absent when the Chernoff value is >= 0.5.
  std::optional<double> chernoff_time;
};

/// Relaxation time of repetition coding with a global majority refresh.
/// Accepts 0 < delta <= 0.5; throws std::domain_error when p_e >= 0.5.
RepetitionRelaxation repetition_relaxation_time(int n, double xi, double delta);

/// (1 + (1 - 2 p_e)^t) / 2: probability of decoding correctly after t intervals.
double repetition_success_probability(double p_e, int t);

struct SimulationReport {
  /// success_prob[t] for t = 0..T; entry 0 is the freshly written state.
  std::vector<double> success_prob;
  std::vector<double> standard_error;
  /// First t with success below 1 - delta, if any within T.
  std::optional<int> estimated_relaxation;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  MemorySpec spec;

  /// JSON header with spec and seed, then "t,success_prob,stderr" rows.
  std::string to_csv() const;
};

/// Bit-level Monte Carlo of the repetition memory: each interval flips every
/// bit with probability xi, then rewrites all bits to the majority value
/// (ties count as the wrong codeword). Trial i uses Stream(seed, i) and
/// successes are integer counts, so the report does not depend on trial order.
SimulationReport simulate_memory(const MemorySpec& spec, std::size_t trials, std::uint64_t seed);

}  // namespace sdpi

#endif  // SDPI_MEMORY_H
