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

// Acceptance gate. Each criterion prints one PASS/FAIL line with the
// measured numbers and wall time; the exit status is nonzero if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "sdpi/contraction.h"
#include "sdpi/info.h"
#include "sdpi/memory.h"
#include "sdpi/network.h"
#include "sdpi/oracle.h"
#include "sdpi/quadratic_forms.h"
#include "sdpi/rng.h"
#include "sdpi/size_bounds.h"

namespace {

using namespace sdpi;

struct Outcome {
  bool pass = true;
  std::string detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

// log C(n, k) + k log x + (n-k) log(1-x), summed in plain doubles.
double binomial_tail(int n, double x, int from) {
  double s = 0.0;
  for (int k = from; k <= n; ++k) {
    const double log_c = std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
    s += std::exp(log_c + k * std::log(x) + (n - k) * std::log1p(-x));
  }
  return s;
}

Outcome bsc_special_case() {
  Outcome o;
  double worst = 0.0;
  for (int i = 0; i <= 10; ++i) {
    const double p = 0.05 * i;
    worst = std::max(worst, std::abs(theorem1_bound(Channel::bsc(p)).eta - (1 - 2 * p) * (1 - 2 * p)));
  }
  o.check(worst <= 1e-12, "max |eta - (1-2p)^2| = " + fmt(worst));
  o.note("max error " + fmt(worst));
  return o;
}

Outcome proposition1_equality() {
  Outcome o;
  double worst = 0.0;
  for (int n = 1; n <= 8; ++n) {
    for (double xi : {0.05, 0.15, 0.25, 0.35, 0.45}) {
      // Full pair scan over the 2^n x 2^n channel, not the distance-class shortcut.
      const double exact = theorem1_bound(independent_layer_channel({xi, n})).eta;
      const double closed = 1 - std::pow(4 * xi - 4 * xi * xi, n);
      worst = std::max(worst, std::abs(exact - closed));
    }
  }
  o.check(worst <= 1e-9, "max deviation " + fmt(worst));
  o.note("max deviation " + fmt(worst));
  return o;
}

Outcome depth_tradeoff() {
  Outcome o;
  const DepthTradeoff t = optimal_depth_tradeoff(5e8, 0.37, 0.4, 6);
  const double omega6 = parity_size_complexity(5e8, 6);
  o.check(t.best_depth == 4, "optimal depth " + std::to_string(t.best_depth));
  o.check(std::abs(t.best_value - 61.22) <= 0.01, "minimum " + fmt(t.best_value));
  o.check(std::abs(omega6 - 6.915) <= 0.001, "Omega(n,6) " + fmt(omega6));
  o.note("depth " + std::to_string(t.best_depth) + ", value " + fmt(t.best_value) + ", Omega6 " + fmt(omega6));
  return o;
}

Outcome evans_schulman_tightness() {
  Outcome o;
  int violations = 0;
  for (int k = 1; k <= 99; ++k) {
    const double eta = 0.01 * k;
    for (int n : {2, 3, 5}) {
      if (!(1 - std::pow(1 - eta, n) < evans_schulman_raw(eta, n))) ++violations;
    }
  }
  // Fig. 2 rows: xi over [0, 0.5] in steps of 0.01 with n = 3.
  int row_violations = 0;
  for (int i = 0; i <= 50; ++i) {
    const double xi = 0.01 * i;
    const double eta = 1 - (4 * xi - 4 * xi * xi);
    const double ours = 1 - std::pow(1 - eta, 3);
    if (ours > evans_schulman_raw(eta, 3)) ++row_violations;
  }
  o.check(violations == 0, std::to_string(violations) + " strict-inequality violations");
  o.check(row_violations == 0, std::to_string(row_violations) + " figure rows with ours > ES");
  o.note("297 grid points, 51 figure rows");
  return o;
}

Outcome correlated_noise() {
  Outcome o;
  const double xi2 = 0.35;
  double worst_excess = -1.0;
  double gap_001 = 0.0, gap_007 = 0.0;
  for (int i = 1; i <= 14; ++i) {
    const double xi1 = 0.005 * i;
    const CorrelatedNoiseSpec s{xi1, xi2, 5};
    const double exact = theorem1_bound(correlated_layer_channel(s)).eta;
    const double matched = xi1 * (1 - xi2) + (1 - xi1) * xi2;
    const double ind = 1 - std::pow(4 * matched - 4 * matched * matched, 5);
    worst_excess = std::max(worst_excess, exact - ind);
    const double gap = std::abs(exact - correlated_layer_bound_leading(s));
    if (i == 2) gap_001 = gap;
    if (i == 14) gap_007 = gap;
  }
  const double ratio = gap_007 / gap_001;
  o.check(worst_excess <= 1e-9, "exact exceeds independent by " + fmt(worst_excess));
  o.check(ratio >= 4, "gap ratio " + fmt(ratio));
  o.note("max(exact - ind) " + fmt(worst_excess) + ", gap ratio " + fmt(ratio));
  return o;
}

Outcome sdpi_fuzz() {
  Outcome o;
  int violations = 0, used = 0;
  double worst = -1.0;
  for (std::uint64_t i = 0; i < 10000; ++i) {
    Stream rng(2026, i);
    const RandomChain ch = random_chain(rng, 4);
    const double ixy = mutual_information(ch.px, ch.c_xy);
    if (ixy <= 1e-10) continue;
    ++used;
    const double ixz = mutual_information(ch.px, compose(ch.c_xy, ch.c_yz));
    const double excess = ixz / ixy - theorem1_bound(ch.c_yz).eta;
    worst = std::max(worst, excess);
    if (excess > 1e-9) ++violations;
  }
  o.check(violations == 0, std::to_string(violations) + " violations");
  o.note(std::to_string(used) + " informative chains, max(ratio - eta) " + fmt(worst));
  return o;
}

Outcome appendix_identities() {
  Outcome o;
  double worst_identity = 0.0, worst_equal = 0.0, min_square = 0.0, worst_rayleigh = -1.0;
  int cases = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Stream rng(7, i);
    const std::size_t n = 2 + rng.next() % 5;
    const std::size_t m = 2 + rng.next() % 5;
    const Channel a = random_channel(rng, n, m);
    const double eta = theorem1_bound(a).eta;
    std::vector<double> coeffs(n - 1);
    for (auto& c : coeffs) c = 2 * rng.uniform() - 1;
    // Keep p away from the boundary so the Hessians stay well conditioned.
    auto interior = [&] {
      std::vector<double> v = rng.simplex(n);
      for (auto& x : v) x = 1e-3 + (1 - 1e-3 * n) * x;
      return Distribution(v);
    };
    const AppendixReport r = appendix_identity_check(a, interior(), coeffs);
    ++cases;
    worst_identity = std::max(worst_identity, r.identity_residual);
    worst_equal = std::max(worst_equal, r.equal_rows_residual);
    min_square = std::min(min_square, r.min_square_term);
    for (int k = 0; k < 100; ++k) {
      worst_rayleigh = std::max(worst_rayleigh, rayleigh_sup(a, interior()) - eta);
    }
  }
  o.check(worst_identity < 1e-9, "identity residual " + fmt(worst_identity));
  o.check(min_square >= -1e-12, "min Q_st " + fmt(min_square));
  o.check(worst_equal < 1e-9, "equal-rows residual " + fmt(worst_equal));
  o.check(worst_rayleigh <= 1e-9, "rayleigh_sup - eta " + fmt(worst_rayleigh));
  o.note(std::to_string(cases) + " cases, residuals " + fmt(worst_identity) + "/" + fmt(worst_equal) +
         ", max(rayleigh - eta) " + fmt(worst_rayleigh));
  return o;
}

Outcome theorem2_networks() {
  Outcome o;
  int violations = 0;
  double worst = -1.0;
  const double xis[] = {0.1, 0.2, 0.3};
  for (std::uint64_t i = 0; i < 100; ++i) {
    Stream rng(8, i);
    const int input_width = 1 + static_cast<int>(rng.next() % 5);
    const int depth = 1 + static_cast<int>(rng.next() % 4);
    std::vector<int> widths;
    for (int l = 0; l < depth; ++l) widths.push_back(1 + static_cast<int>(rng.next() % 5));
    const double xi = xis[i % 3];
    const NoisyNetwork net = random_network(rng, input_width, widths, xi);
    const Distribution px(rng.simplex(std::size_t{1} << input_width));
    const double h = entropy(px);
    const double mi = exact_io_mutual_information(net, px);
    double bound = h;
    for (int w : widths) bound *= 1 - std::pow(4 * xi - 4 * xi * xi, w);
    worst = std::max({worst, mi - bound, mi - h});
    if (mi > bound + 1e-9 || mi > h + 1e-9) ++violations;
  }
  o.check(violations == 0, std::to_string(violations) + " violations");
  o.note("100 networks, max excess " + fmt(worst));
  return o;
}

Outcome memory_model() {
  Outcome o;
  const int n = 9;
  const double xi = 0.3, delta = 0.4;
  const double oracle_pe = binomial_tail(n, xi, 5);
  const double pe = catastrophic_prob_exact(n, xi);
  const double chernoff = catastrophic_prob_chernoff(n, xi);
  o.check(std::abs(pe - 0.09881) <= 1e-5, "p_e " + fmt(pe));
  o.check(std::abs(pe - oracle_pe) <= 1e-12, "p_e vs binomial oracle " + fmt(oracle_pe));
  o.check(std::abs(chernoff - 0.4566) <= 1e-4, "Chernoff " + fmt(chernoff) + " vs 0.4566");
  o.check(pe <= chernoff, "exact above Chernoff");
  const RepetitionRelaxation rep = repetition_relaxation_time(n, xi, delta);
  o.check(std::abs(rep.time - 7.31) <= 0.01, "relaxation time " + fmt(rep.time));

  const SimulationReport sim = simulate_memory({n, xi, delta, 20}, 100000, 0);
  int outside = 0;
  double worst_z = 0.0;
  for (int t = 0; t <= 20; ++t) {
    const double expect = (1 + std::pow(1 - 2 * oracle_pe, t)) / 2;
    const double se = std::sqrt(expect * (1 - expect) / 100000.0);
    const double diff = std::abs(sim.success_prob[t] - expect);
    if (se > 0) worst_z = std::max(worst_z, diff / se);
    if (diff > 3 * se + 1e-15) ++outside;
  }
  o.check(outside == 0, std::to_string(outside) + " Monte Carlo points beyond 3 SE");

  int sandwich = 0;
  for (int m = 5; m <= 25; m += 2) {
    for (double x : {0.05, 0.1, 0.2, 0.3, 0.4}) {
      for (double d : {0.1, 0.2, 0.3, 0.4}) {
        if (repetition_relaxation_time(m, x, d).time > relaxation_upper_bound(m, x, d).bound) ++sandwich;
      }
    }
  }
  o.check(sandwich == 0, std::to_string(sandwich) + " sandwich violations");
  o.note("p_e " + fmt(pe) + ", Chernoff " + fmt(chernoff) + ", T " + fmt(rep.time) + ", max |z| " +
         fmt(worst_z));
  return o;
}

Outcome amgm_fuzz() {
  Outcome o;
  int violations = 0, equal_misses = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Stream rng(10, i);
    const double a = rng.uniform();
    std::vector<int> widths(1 + rng.next() % 6);
    for (auto& w : widths) w = 1 + static_cast<int>(rng.next() % 20);
    if (i % 10 == 0) std::fill(widths.begin(), widths.end(), widths.front());
    double product = 1.0;
    for (int w : widths) product *= 1 - std::pow(a, w);
    const double mean = std::accumulate(widths.begin(), widths.end(), 0.0) / widths.size();
    const double bound = std::pow(1 - std::pow(a, mean), static_cast<double>(widths.size()));
    if (product > bound + 1e-12) ++violations;
    const AmGmBound lib = amgm_product_bound(a, widths);
    if (std::abs(lib.product - product) > 1e-13 || std::abs(lib.bound - bound) > 1e-13) ++violations;
    if (lib.equal_widths && std::abs(lib.product - lib.bound) > 1e-12) ++equal_misses;
  }
  o.check(violations == 0, std::to_string(violations) + " violations");
  o.check(equal_misses == 0, std::to_string(equal_misses) + " equal-width cases without equality");
  o.note("1000 instances");
  return o;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "BSC special case", 1, bsc_special_case},
      {2, "layer closed form equals pair scan", 30, proposition1_equality},
      {3, "parity depth tradeoff", 1, depth_tradeoff},
      {4, "tighter than Evans-Schulman", 1, evans_schulman_tightness},
      {5, "correlated-noise layer", 5, correlated_noise},
      {6, "SDPI fuzz", 60, sdpi_fuzz},
      {7, "quadratic-form identities", 60, appendix_identities},
      {8, "network information bound", 120, theorem2_networks},
      {9, "repetition memory", 120, memory_model},
      {10, "AM-GM product bound", 1, amgm_fuzz},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.check(secs < c.budget_s, "runtime " + fmt(secs) + " s over budget " + fmt(c.budget_s) + " s");
    if (!o.pass) ++failures;
    std::printf("%s criterion %d (%s): %s [%.3f s]\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
