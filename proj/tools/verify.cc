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

#include "verify.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "sdpi/channel_io.h"
#include "sdpi/contraction.h"
#include "sdpi/memory.h"
#include "sdpi/network.h"
#include "sdpi/oracle.h"
#include "sdpi/quadratic_forms.h"
#include "sdpi/rng.h"
#include "sdpi/size_bounds.h"

namespace sdpi::cli {

namespace {

std::vector<double> as_vector(std::span<const double> s) { return {s.begin(), s.end()}; }

nlohmann::json channel_json(const Channel& c) { return nlohmann::json::parse(channel_to_json(c)); }

void record(SuiteResult& r, double violation, bool failed, const nlohmann::json& detail) {
  ++r.cases;
  r.worst = std::max(r.worst, violation);
  if (failed && r.pass) {
    r.pass = false;
    r.counterexample = detail;
  }
}

SuiteResult sdpi_fuzz(std::uint64_t seed, std::size_t budget) {
  SuiteResult r;
  r.suite = "sdpi-fuzz";
  r.worst = -1.0;
  for (std::size_t i = 0; i < budget; ++i) {
    Stream rng(seed, i);
    const RandomChain chain = random_chain(rng, 4);
    const auto ratio = contraction_ratio(chain.px, chain.c_xy, chain.c_yz);
    if (!ratio) continue;
    const double eta = theorem1_bound(chain.c_yz).eta;
    const double excess = *ratio - eta;
    record(r, excess, excess > 1e-9,
           {{"index", i},
            {"ratio", *ratio},
            {"eta", eta},
            {"px", as_vector(chain.px.probs())},
            {"c_xy", channel_json(chain.c_xy)},
            {"c_yz", channel_json(chain.c_yz)}});
  }
  return r;
}

SuiteResult appendix_identity(std::uint64_t seed, std::size_t budget) {
  SuiteResult r;
  r.suite = "appendix-identity";
  for (std::size_t i = 0; i < budget; ++i) {
    Stream rng(seed, i);
    const std::size_t n = 2 + rng.next() % 5;
    const std::size_t m = 2 + rng.next() % 5;
    const Channel a = random_channel(rng, n, m);
    const Distribution p(rng.simplex(n));
    if (p.min_entry() < kInteriorThreshold) continue;
    std::vector<double> coeffs(n - 1);
    for (auto& c : coeffs) c = 2.0 * rng.uniform() - 1.0;
    const AppendixReport rep = appendix_identity_check(a, p, coeffs);
    const double worst = std::max({rep.identity_residual, rep.equal_rows_residual,
                                   std::max(0.0, -rep.min_square_term)});
    const bool failed = rep.identity_residual >= 1e-9 || rep.equal_rows_residual >= 1e-9 ||
                        rep.min_square_term < -1e-12;
    record(r, worst, failed,
           {{"index", i},
            {"identity_residual", rep.identity_residual},
            {"equal_rows_residual", rep.equal_rows_residual},
            {"min_square_term", rep.min_square_term},
            {"p", as_vector(p.probs())},
            {"coeffs", coeffs},
            {"channel", channel_json(a)}});
  }
  return r;
}

SuiteResult prop1_equality(std::uint64_t, std::size_t budget) {
  SuiteResult r;
  r.suite = "prop1-equality";
  const int max_n = static_cast<int>(std::clamp<std::size_t>(budget, 1, 10));
  for (int n = 1; n <= max_n; ++n) {
    for (double xi : {0.05, 0.15, 0.25, 0.35, 0.45}) {
      const LayerNoiseSpec spec{xi, n};
      const double exact = theorem1_bound_hamming(independent_layer_channel(spec), n).eta;
      const double closed = independent_layer_bound(spec);
      const double diff = std::abs(exact - closed);
      record(r, diff, diff > 1e-9, {{"n", n}, {"xi", xi}, {"exact", exact}, {"closed_form", closed}});
    }
  }
  return r;
}

SuiteResult memory_sandwich(std::uint64_t, std::size_t) {
  SuiteResult r;
  r.suite = "memory-sandwich";
  r.worst = -std::numeric_limits<double>::infinity();
  for (int n = 5; n <= 25; n += 2) {
    for (double xi : {0.1, 0.2, 0.3, 0.4}) {
      for (double delta : {0.3, 0.4}) {
        const double lower = repetition_relaxation_time(n, xi, delta).time;
        const double upper = relaxation_upper_bound(n, xi, delta).bound;
        const double excess = lower - upper;
        ++r.cases;
        r.worst = std::max(r.worst, excess);
        if (excess > 1e-9 && r.pass) {
          r.pass = false;
          r.counterexample = {{"n", n}, {"xi", xi}, {"delta", delta}, {"lower", lower}, {"upper", upper}};
        }
      }
    }
  }
  return r;
}

SuiteResult theorem2_networks(std::uint64_t seed, std::size_t budget) {
  SuiteResult r;
  r.suite = "theorem2-networks";
  r.worst = -1.0;
  const double xis[] = {0.1, 0.2, 0.3};
  for (std::size_t i = 0; i < budget; ++i) {
    Stream rng(seed, i);
    const int input_width = 1 + static_cast<int>(rng.next() % 5);
    const int depth = 1 + static_cast<int>(rng.next() % 4);
    std::vector<int> widths;
    for (int l = 0; l < depth; ++l) widths.push_back(1 + static_cast<int>(rng.next() % 5));
    const double xi = xis[i % 3];
    const NoisyNetwork net = random_network(rng, input_width, widths, xi);
    const Distribution px = Distribution::uniform(std::size_t{1} << input_width);
    const double h = entropy(px);
    const double mi = exact_io_mutual_information(net, px);
    const double bound = theorem2_bound(widths, xi, h);
    const double excess = std::max(mi - bound, mi - h);
    record(r, excess, excess > 1e-9,
           {{"index", i}, {"mi", mi}, {"bound", bound}, {"h_x", h},
            {"network", nlohmann::json::parse(network_to_json(net))}});
  }
  return r;
}

struct Suite {
  const char* name;
  std::size_t default_budget;
  SuiteResult (*run)(std::uint64_t, std::size_t);
};

constexpr Suite kSuites[] = {
    {"sdpi-fuzz", 10000, sdpi_fuzz},
    {"appendix-identity", 1000, appendix_identity},
    {"prop1-equality", 8, prop1_equality},
    {"memory-sandwich", 0, memory_sandwich},
    {"theorem2-networks", 100, theorem2_networks},
};

}  // namespace

nlohmann::json SuiteResult::to_json() const {
  return {{"suite", suite}, {"pass", pass}, {"cases", cases}, {"worst", worst},
          {"counterexample", counterexample}};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& s : kSuites) v.emplace_back(s.name);
    return v;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  return std::find(suite_names().begin(), suite_names().end(), name) != suite_names().end();
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, std::size_t budget) {
  for (const auto& s : kSuites) {
    if (name == s.name) return s.run(seed, budget == 0 ? s.default_budget : budget);
  }
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace sdpi::cli
