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

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "sdpi/size_bounds.h"

namespace sdpi {
namespace {

// Binomial tail k >= ceil(n/2) with coefficients from Pascal's triangle,
// no log space. For even n this includes the tie k = n/2.
double tail_by_pascal(int n, double xi) {
  std::vector<double> row = {1.0};
  for (int k = 1; k <= n; ++k) {
    std::vector<double> next(k + 1, 1.0);
    for (int j = 1; j < k; ++j) next[j] = row[j - 1] + row[j];
    row = std::move(next);
  }
  double s = 0.0;
  for (int k = (n + 1) / 2; k <= n; ++k) s += row[k] * std::pow(xi, k) * std::pow(1 - xi, n - k);
  return s;
}

TEST(Overhead, Examples) {
  EXPECT_NEAR(overhead_lower_bound(0.4, 100, 0.1), 3.288, 1e-3);
  double prev = 0.0;
  for (int t = 1; t <= 200; ++t) {
    const double n = overhead_lower_bound(0.4, t, 0.1);
    EXPECT_GT(n, prev);
    prev = n;
  }
  EXPECT_GT(overhead_lower_bound(0.4, 1, 0.1), 0.0);
}

TEST(Overhead, InvertsRelaxationBound) {
  for (double xi : {0.05, 0.2, 0.35}) {
    for (int t : {1, 10, 100}) {
      const double n = overhead_lower_bound(0.3, t, xi);
      EXPECT_NEAR(relaxation_upper_bound(n, xi, 0.3).bound, t, 1e-8 * t);
    }
  }
}

TEST(Relaxation, UpperBoundExample) {
  const RelaxationUpper r = relaxation_upper_bound(9, 0.3, 0.4);
  EXPECT_NEAR(r.bound, 15.157, 1e-3);
  EXPECT_GT(r.asymptotic, r.bound);
}

TEST(CatastrophicEvent, MatchesPascalTail) {
  EXPECT_NEAR(catastrophic_prob_exact(9, 0.3), 0.09881, 1e-5);
  for (int n = 1; n <= 40; ++n) {
    for (double xi : {0.01, 0.1, 0.3, 0.45}) {
      EXPECT_NEAR(catastrophic_prob_exact(n, xi), tail_by_pascal(n, xi), 1e-13) << n << " " << xi;
    }
  }
}

TEST(CatastrophicEvent, ChernoffDominatesForOddN) {
  for (int n = 1; n <= 41; n += 2) {
    for (double xi : {0.01, 0.1, 0.3, 0.45}) {
      EXPECT_LE(catastrophic_prob_exact(n, xi), catastrophic_prob_chernoff(n, xi));
    }
  }
  EXPECT_NEAR(catastrophic_prob_chernoff(9, 0.3), std::pow(0.84, 4.5), 1e-15);
}

TEST(CatastrophicEvent, LargeNStaysFinite) {
  const double p = catastrophic_prob_exact(2001, 0.1);
  EXPECT_GE(p, 0.0);
  EXPECT_LT(p, 1e-200);
}

TEST(Repetition, RelaxationTimeExample) {
  const RepetitionRelaxation r = repetition_relaxation_time(9, 0.3, 0.4);
  EXPECT_NEAR(r.p_e, 0.09881, 1e-5);
  EXPECT_NEAR(r.time, 7.31, 0.01);
  ASSERT_TRUE(r.chernoff_time.has_value());
  EXPECT_LE(*r.chernoff_time, r.time);
  EXPECT_TRUE(repetition_relaxation_time(9, 0.3, 0.5).diverges);
}

TEST(Repetition, SuccessCurveCrossesDelta) {
  const RepetitionRelaxation r = repetition_relaxation_time(9, 0.3, 0.4);
  const int before = static_cast<int>(std::floor(r.time));
  EXPECT_GE(repetition_success_probability(r.p_e, before), 0.6);
  EXPECT_LT(repetition_success_probability(r.p_e, before + 1), 0.6);
}

TEST(Repetition, SandwichedByUpperBound) {
  for (int n = 5; n <= 25; n += 2) {
    for (double xi : {0.05, 0.2, 0.35}) {
      EXPECT_LE(repetition_relaxation_time(n, xi, 0.4).time, relaxation_upper_bound(n, xi, 0.4).bound);
    }
  }
}

TEST(Simulation, TracksAnalyticCurve) {
  const MemorySpec spec{9, 0.3, 0.4, 20};
  const SimulationReport rep = simulate_memory(spec, 20000, 3);
  const double pe = catastrophic_prob_exact(9, 0.3);
  ASSERT_EQ(rep.success_prob.size(), 21u);
  EXPECT_EQ(rep.success_prob[0], 1.0);
  int outside = 0;
  for (int t = 1; t <= 20; ++t) {
    const double expect = repetition_success_probability(pe, t);
    const double se = std::sqrt(expect * (1 - expect) / rep.trials);
    if (std::abs(rep.success_prob[t] - expect) > 4 * se) ++outside;
  }
  EXPECT_EQ(outside, 0);
  ASSERT_TRUE(rep.estimated_relaxation.has_value());
  EXPECT_NEAR(*rep.estimated_relaxation, 7, 1);
}

TEST(Simulation, Deterministic) {
  const MemorySpec spec{5, 0.1, 0.3, 5};
  EXPECT_EQ(simulate_memory(spec, 1000, 11).to_csv(), simulate_memory(spec, 1000, 11).to_csv());
}

TEST(Simulation, RejectsBadSpecs) {
  EXPECT_THROW(simulate_memory({0, 0.1, 0.3, 5}, 10, 0), std::invalid_argument);
  EXPECT_THROW(simulate_memory({5, 0.5, 0.3, 5}, 10, 0), std::invalid_argument);
  EXPECT_THROW(simulate_memory({5, 0.1, 0.6, 5}, 10, 0), std::invalid_argument);
}

}  // namespace
}  // namespace sdpi
