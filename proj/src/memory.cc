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

#include "sdpi/memory.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "json.hpp"
#include "sdpi/contraction.h"
#include "sdpi/rng.h"
#include "sdpi/size_bounds.h"

namespace sdpi {

namespace {

void check_open_xi(double xi) {
  if (!(xi > 0.0 && xi < 0.5)) throw std::invalid_argument("xi must lie in (0, 0.5)");
}

void check_open_delta(double delta) {
  if (!(delta > 0.0 && delta < 0.5)) throw std::invalid_argument("delta must lie in (0, 0.5)");
}

// Neumaier-compensated sum of exp(log_terms), shifted by the largest term.
double sum_exp(const std::vector<double>& log_terms) {
  const double top = *std::max_element(log_terms.begin(), log_terms.end());
  if (top == -std::numeric_limits<double>::infinity()) return 0.0;
  double sum = 0.0;
  double comp = 0.0;
  for (double l : log_terms) {
    const double v = std::exp(l - top);
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  return std::exp(top) * (sum + comp);
}

std::string fmt9(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

}  // namespace

void MemorySpec::validate() const {
  if (n < 1) throw std::invalid_argument("memory needs at least one physical bit");
  if (!(xi >= 0.0 && xi < 0.5)) throw std::invalid_argument("xi must lie in [0, 0.5)");
  check_open_delta(delta);
  if (T < 1) throw std::invalid_argument("T must be at least one interval");
}

double overhead_lower_bound(double delta, int T, double xi) {
  check_open_delta(delta);
  check_open_xi(xi);
  if (T < 1) throw std::invalid_argument("T must be at least one interval");
  const double cap = delta_capacity(delta);
  return std::log1p(-std::pow(cap, 1.0 / T)) / std::log(bsc_affinity(xi));
}

RelaxationUpper relaxation_upper_bound(double n, double xi, double delta) {
  check_open_delta(delta);
  check_open_xi(xi);
  if (!(n > 0.0)) throw std::invalid_argument("n must be positive");
  const double a = bsc_affinity(xi);
  const double log_cap = std::log(delta_capacity(delta));
  RelaxationUpper r;
  r.bound = log_cap / std::log1p(-std::pow(a, n));
  r.asymptotic = -log_cap * std::exp(n * std::log(1.0 / a));
  return r;
}

double catastrophic_prob_exact(int n, double xi) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (!(xi >= 0.0 && xi <= 1.0)) throw std::invalid_argument("xi must lie in [0, 1]");
  const int first = (n + 1) / 2;  // ceil(n/2): ties at n/2 count as failure
  if (xi == 0.0) return 0.0;
  if (xi == 1.0) return 1.0;
  const double log_xi = std::log(xi);
  const double log_keep = std::log1p(-xi);
  std::vector<double> terms;
  for (int k = first; k <= n; ++k) {
    const double log_choose = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    terms.push_back(log_choose + k * log_xi + (n - k) * log_keep);
  }
  return std::min(sum_exp(terms), 1.0);
}

double catastrophic_prob_chernoff(int n, double xi) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (!(xi >= 0.0 && xi <= 1.0)) throw std::invalid_argument("xi must lie in [0, 1]");
  return std::pow(bsc_affinity(xi), 0.5 * n);
}

double repetition_success_probability(double p_e, int t) {
  return 0.5 * (1.0 + std::pow(1.0 - 2.0 * p_e, t));
}

RepetitionRelaxation repetition_relaxation_time(int n, double xi, double delta) {
  if (!(delta > 0.0 && delta <= 0.5)) throw std::invalid_argument("delta must lie in (0, 0.5]");
  if (!(xi >= 0.0 && xi < 0.5)) throw std::invalid_argument("xi must lie in [0, 0.5)");
  RepetitionRelaxation r;
  r.p_e = catastrophic_prob_exact(n, xi);
  if (r.p_e >= 0.5) {
    throw std::domain_error("catastrophic probability >= 0.5: the memory holds no information");
  }
  const double numer = std::log1p(-2.0 * delta);
  r.time = numer / std::log1p(-2.0 * r.p_e);
  if (!std::isfinite(r.time)) {
    r.time = std::numeric_limits<double>::infinity();
    r.diverges = true;
  }
  const double p_ch = catastrophic_prob_chernoff(n, xi);
  if (p_ch < 0.5) {
    const double t = numer / std::log1p(-2.0 * p_ch);
    r.chernoff_time = std::isfinite(t) ? t : std::numeric_limits<double>::infinity();
  }
  return r;
}

std::string SimulationReport::to_csv() const {
  nlohmann::json header{{"n", spec.n},       {"xi", spec.xi},         {"delta", spec.delta},
                        {"T", spec.T},       {"trials", trials},       {"seed", seed}};
  header["estimated_relaxation"] =
      estimated_relaxation ? nlohmann::json(*estimated_relaxation) : nlohmann::json(nullptr);
  std::string out = "# " + header.dump() + "\n";
  out += "t,success_prob,stderr\n";
  for (std::size_t t = 0; t < success_prob.size(); ++t) {
    out += std::to_string(t) + "," + fmt9(success_prob[t]) + "," + fmt9(standard_error[t]) + "\n";
  }
  return out;
}

SimulationReport simulate_memory(const MemorySpec& spec, std::size_t trials, std::uint64_t seed) {
  spec.validate();
  if (trials < 1) throw std::invalid_argument("simulate_memory: need at least one trial");
  std::vector<std::uint64_t> correct(spec.T + 1, 0);
  std::vector<std::uint8_t> bits(spec.n);
  for (std::size_t i = 0; i < trials; ++i) {
    Stream rng(seed, i);
    std::uint8_t codeword = 0;
    std::fill(bits.begin(), bits.end(), codeword);
    ++correct[0];
    for (int t = 1; t <= spec.T; ++t) {
      int ones = 0;
      for (auto& b : bits) {
        if (rng.bernoulli(spec.xi)) b ^= 1U;
        ones += b;
      }
      if (2 * ones > spec.n) {
        codeword = 1;
      } else if (2 * ones < spec.n) {
        codeword = 0;
      } else {
        codeword ^= 1U;
      }
      std::fill(bits.begin(), bits.end(), codeword);
      if (codeword == 0) ++correct[t];
    }
  }
  SimulationReport r;
  r.trials = trials;
  r.seed = seed;
  r.spec = spec;
  const double total = static_cast<double>(trials);
  for (int t = 0; t <= spec.T; ++t) {
    const double p = static_cast<double>(correct[t]) / total;
    r.success_prob.push_back(p);
    r.standard_error.push_back(std::sqrt(p * (1.0 - p) / total));
    if (!r.estimated_relaxation && p < 1.0 - spec.delta) r.estimated_relaxation = t;
  }
  return r;
}

}  // namespace sdpi
