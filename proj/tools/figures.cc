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

#include "figures.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"
#include "sdpi/contraction.h"
#include "sdpi/memory.h"
#include "sdpi/size_bounds.h"

namespace sdpi::cli {

namespace {

std::string cell_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  return std::get<std::string>(c);
}

nlohmann::json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    if (!std::isfinite(*d)) return format_number(*d);
    // Round-trip through the printed form so JSON and CSV agree digit for digit.
    return std::stod(format_number(*d));
  }
  if (const auto* i = std::get_if<std::int64_t>(&c)) return *i;
  return std::get<std::string>(c);
}

double parse_double(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::invalid_argument("cannot parse '" + std::string(s) + "' as a number");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string to_csv(const Dataset& d, std::string_view invocation, std::uint64_t seed) {
  std::string out = "# invocation: " + std::string(invocation) + "; seed=" + std::to_string(seed) + "\n";
  for (const auto& note : d.notes) out += "# " + note + "\n";
  for (std::size_t i = 0; i < d.columns.size(); ++i) {
    out += (i ? "," : "") + d.columns[i];
  }
  out += "\n";
  for (const auto& row : d.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      out += (i ? "," : "") + cell_text(row[i]);
    }
    out += "\n";
  }
  return out;
}

std::string to_json(const Dataset& d, std::string_view invocation, std::uint64_t seed) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : d.rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& c : row) r.push_back(cell_json(c));
    rows.push_back(std::move(r));
  }
  nlohmann::json doc{{"invocation", invocation},
                     {"seed", seed},
                     {"columns", d.columns},
                     {"rows", rows},
                     {"notes", d.notes}};
  return doc.dump(2) + "\n";
}

std::vector<double> parse_grid(std::string_view spec) {
  if (spec.find(':') != std::string_view::npos) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) throw std::invalid_argument("grid must be start:stop:step");
    const double start = parse_double(parts[0]);
    const double stop = parse_double(parts[1]);
    const double step = parse_double(parts[2]);
    if (!(step > 0.0) || stop < start) throw std::invalid_argument("grid needs step > 0 and stop >= start");
    const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
    if (count > 1000000) throw std::invalid_argument("grid has too many points");
    std::vector<double> out;
    for (long i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
  }
  std::vector<double> out;
  for (auto part : split(spec, ',')) out.push_back(parse_double(part));
  return out;
}

std::vector<int> parse_int_list(std::string_view spec) {
  std::vector<int> out;
  for (double v : parse_grid(spec)) {
    if (v != std::floor(v)) throw std::invalid_argument("expected integers in '" + std::string(spec) + "'");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

Dataset figure2(const std::vector<double>& xi_grid, int n) {
  if (n < 1) throw std::invalid_argument("fig 2: n must be positive");
  Dataset d;
  d.columns = {"xi", "evans_schulman", "ours"};
  for (double xi : xi_grid) {
    if (!(xi >= 0.0 && xi <= 0.5)) throw std::invalid_argument("fig 2: xi grid must lie in [0, 0.5]");
    const double eta = 1.0 - bsc_affinity(xi);
    d.rows.push_back({xi, evans_schulman_raw(eta, n), 1.0 - std::pow(1.0 - eta, n)});
  }
  return d;
}

Dataset figure3(const std::vector<double>& xi1_grid, double xi2, int n) {
  Dataset d;
  d.columns = {"xi1", "eta_ind", "eta_wc_leading", "eta_wc_exact"};
  bool warned = false;
  for (double xi1 : xi1_grid) {
    if (!warned && (xi1 < 0.0 || xi1 > 0.07)) {
      d.warnings.push_back("xi1 outside [0, 0.07]; term ordering is only verified up to 0.07");
      warned = true;
    }
    const CorrelatedNoiseSpec spec{xi1, xi2, n};
    const double eta_ind = independent_layer_bound({matched_flip_probability(xi1, xi2), n});
    const double lead = correlated_layer_bound_leading(spec);
    const double exact = theorem1_bound_hamming(correlated_layer_channel(spec), n).eta;
    d.rows.push_back({xi1, eta_ind, lead, exact});
  }
  return d;
}

Dataset figure5(const std::vector<double>& xi_grid, const std::vector<double>& deltas,
                const std::vector<int>& layers) {
  Dataset d;
  d.columns = {"xi", "delta", "L", "N_s"};
  for (double delta : deltas) {
    for (int l : layers) {
      for (double xi : xi_grid) {
        const MinNeurons m = min_neurons_lower_bound(xi, delta, l);
        d.rows.push_back({xi, delta, std::int64_t{l},
                          m.feasible ? Cell(m.n_s) : Cell(std::string("inf"))});
      }
    }
  }
  return d;
}

Dataset figure6(double n, double xi, double delta, int max_depth) {
  const DepthTradeoff t = optimal_depth_tradeoff(n, xi, delta, max_depth);
  Dataset d;
  d.columns = {"d", "omega", "ns_plus_1", "max"};
  for (const auto& r : t.rows) {
    d.rows.push_back({std::int64_t{r.depth}, r.expressibility_bound, r.noise_bound, r.value()});
  }
  d.notes.push_back("optimal_depth: " + std::to_string(t.best_depth));
  d.notes.push_back("minimum_neurons: " + format_number(t.best_value));
  return d;
}

Dataset figure8(const std::vector<int>& t_grid, const std::vector<std::pair<double, double>>& pairs) {
  Dataset d;
  d.columns = {"T", "delta", "xi", "n_lower"};
  for (const auto& [delta, xi] : pairs) {
    for (int t : t_grid) {
      d.rows.push_back({std::int64_t{t}, delta, xi, overhead_lower_bound(delta, t, xi)});
    }
  }
  return d;
}

std::string gnuplot_script(int number, std::string_view data_file) {
  const std::string f(data_file);
  std::string s = "set datafile separator ','\nset key autotitle columnhead\n";
  switch (number) {
    case 2:
      s += "set xlabel 'xi'\nset ylabel 'contraction bound'\n"
           "plot '" + f + "' using 1:2 with lines, '' using 1:3 with lines\n";
      break;
    case 3:
      s += "set xlabel 'xi1'\nset ylabel 'contraction bound'\n"
           "plot '" + f + "' using 1:2 with lines, '' using 1:3 with lines, '' using 1:4 with points\n";
      break;
    case 5:
      s += "set xlabel 'xi'\nset ylabel 'N_s'\nset logscale y\n"
           "plot '" + f + "' using 1:($4) with points\n";
      break;
    case 6:
      s += "set xlabel 'depth d'\nset ylabel 'neurons'\nset logscale y\n"
           "plot '" + f + "' using 1:2 with points, '' using 1:3 with points, '' using 1:4 with points\n";
      break;
    case 8:
      s += "set xlabel 'T'\nset ylabel 'n lower bound'\n"
           "plot '" + f + "' using 1:4 with points\n";
      break;
    default:
      throw std::invalid_argument("no figure " + std::to_string(number));
  }
  return s;
}

}  // namespace sdpi::cli
