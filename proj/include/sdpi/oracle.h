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

#ifndef SDPI_ORACLE_H
#define SDPI_ORACLE_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "sdpi/info.h"
#include "sdpi/rng.h"

namespace sdpi {

/// Ratios are undefined when I(X;Y) falls below this.
inline constexpr double kMinInformation = 1e-10;

/// Refinement steps in empirical_contraction never go below this I(X;Y), in
/// nats, so rounding in the two MI sums stays far below the ratio's scale.
inline constexpr double kRefineMinInformation = 1e-6;

/// I(X;Z)/I(X;Y) for the chain p_X -> c_xy -> c_yz, or nullopt when
/// I(X;Y) < kMinInformation.
std::optional<double> contraction_ratio(const Distribution& px, const Channel& c_xy,
                                        const Channel& c_yz);

/// Random row-stochastic matrix; each row is a flat Dirichlet draw.
Channel random_channel(Stream& rng, std::size_t n_inputs, std::size_t m_outputs);

struct OracleConfig {
  std::size_t x_alphabet = 2;  ///< |X|, between 2 and 4
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  /// Hill-climbing steps applied to the best sample; 0 disables refinement.
  std::size_t refine_steps = 0;
};

/// Best ratio found by random search over (p_X, c_xy) for a fixed c_yz.
struct EmpiricalContraction {
  double achieved_ratio = 0.0;
  Distribution best_px;
  Channel best_channel_xy;
  std::size_t samples = 0;  ///< samples drawn
  std::size_t used = 0;     ///< samples with a defined ratio
  std::size_t skipped = 0;  ///< samples with I(X;Y) < kMinInformation
  std::uint64_t seed = 0;
  double bound_eta = 0.0;   ///< theorem1_bound(c_yz).eta, for the gap report

  std::string to_json() const;
};

/// Random search for the largest I(X;Z)/I(X;Y). Sample i draws p_X and each
/// row of c_xy from Stream(seed, i); the best sample (earliest index on ties)
/// is then optionally refined by accept-if-better perturbations: a single
/// coordinate nudge, or pulling the rows of c_xy toward their mean, which
/// probes the vanishing-information regime where the bound is approached.
/// Throws std::domain_error if every sample is degenerate.
EmpiricalContraction empirical_contraction(const Channel& c_yz, const OracleConfig& config);

/// A random Markov chain X -> Y -> Z with alphabet sizes drawn from
/// [2, max_alphabet].
struct RandomChain {
  Distribution px;
  Channel c_xy;
  Channel c_yz;
};

RandomChain random_chain(Stream& rng, std::size_t max_alphabet);

}  // namespace sdpi

#endif  // SDPI_ORACLE_H
