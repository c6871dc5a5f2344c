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

#include "commands.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <functional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"
#include "figures.h"
#include "json.hpp"
#include "sdpi/channel_io.h"
#include "sdpi/contraction.h"
#include "sdpi/memory.h"
#include "sdpi/network.h"
#include "sdpi/oracle.h"
#include "sdpi/size_bounds.h"
#include "verify.h"

namespace sdpi::cli {

namespace {

// Signals a valid request whose answer does not exist (exit code 1).
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format = "csv";
  std::string invocation;
};

class Emitter {
 public:
  Emitter(const Globals& g, std::ostream& out) : g_(g), out_(out) {}

  void text(const std::string& s) const {
    if (g_.out_path.empty()) {
      out_ << s;
      return;
    }
    std::ofstream f(g_.out_path, std::ios::binary);
    if (!f) throw std::invalid_argument("cannot write " + g_.out_path);
    f << s;
  }

  void dataset(const Dataset& d, std::ostream& err) const {
    for (const auto& w : d.warnings) err << "warning: " << w << "\n";
    text(g_.format == "json" ? to_json(d, g_.invocation, g_.seed)
                             : to_csv(d, g_.invocation, g_.seed));
  }

 private:
  const Globals& g_;
  std::ostream& out_;
};

std::string join_args(const std::vector<std::string>& args) {
  std::string s = "sdpi";
  for (const auto& a : args) s += " " + a;
  return s;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Strong data processing bounds for noisy channels, networks and memories", "sdpi"};
  app.fallthrough();
  app.require_subcommand(1);

  Globals g;
  g.invocation = join_args(args);
  app.add_option("--seed", g.seed, "Seed for every stochastic command (default 0)");
  app.add_option("--out", g.out_path, "Write output to this file instead of stdout");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}));

  std::function<void()> action;
  const Emitter emit(g, out);

  // bound channel | bound layer
  auto* bound = app.add_subcommand("bound", "Contraction bounds")->require_subcommand(1);
  std::string channel_path;
  std::size_t oracle_samples = 0;
  std::size_t oracle_alphabet = 2;
  std::size_t oracle_refine = 0;
  auto* bound_channel = bound->add_subcommand("channel", "Bound for a channel file (JSON or CSV)");
  bound_channel->add_option("file", channel_path)->required();
  bound_channel->add_option("--oracle-samples", oracle_samples,
                            "Also run the random-search oracle with this many samples");
  bound_channel->add_option("--x-alphabet", oracle_alphabet, "Oracle |X| (2..4)");
  bound_channel->add_option("--refine", oracle_refine, "Oracle refinement steps");
  bound_channel->callback([&] {
    action = [&] {
      const Channel c = load_channel(channel_path);
      const ContractionBound b = theorem1_bound(c);
      if (g.format == "json") {
        auto doc = nlohmann::json::parse(b.to_json());
        if (oracle_samples > 0) {
          const auto o = empirical_contraction(
              c, {oracle_alphabet, oracle_samples, g.seed, oracle_refine});
          doc["oracle"] = nlohmann::json::parse(o.to_json());
        }
        emit.text(doc.dump() + "\n");
        return;
      }
      Dataset d;
      d.columns = {"eta", "witness_k", "witness_l", "bhattacharyya", "method"};
      d.rows.push_back({b.eta, static_cast<std::int64_t>(b.k), static_cast<std::int64_t>(b.l),
                        b.bhattacharyya, b.method});
      if (oracle_samples > 0) {
        const auto o =
            empirical_contraction(c, {oracle_alphabet, oracle_samples, g.seed, oracle_refine});
        d.notes.push_back("oracle_achieved_ratio: " + format_number(o.achieved_ratio));
        d.notes.push_back("oracle_samples_used: " + std::to_string(o.used) + " of " +
                          std::to_string(o.samples));
      }
      emit.dataset(d, err);
    };
  });

  double layer_xi = -1.0;
  int layer_n = 1;
  double layer_xi1 = -1.0;
  double layer_xi2 = -1.0;
  auto* bound_layer = bound->add_subcommand("layer", "Bounds for a layer of noisy neurons");
  bound_layer->add_option("--xi", layer_xi, "Independent flip probability");
  bound_layer->add_option("--n", layer_n, "Neurons in the layer")->required();
  bound_layer->add_option("--xi1", layer_xi1, "Shared flip probability (correlated model)");
  bound_layer->add_option("--xi2", layer_xi2, "Independent flip probability (correlated model)");
  bound_layer->callback([&] {
    action = [&] {
      Dataset d;
      const bool correlated = layer_xi1 >= 0.0 || layer_xi2 >= 0.0;
      if (correlated) {
        if (layer_xi1 < 0.0 || layer_xi2 < 0.0) {
          throw std::invalid_argument("correlated model needs both --xi1 and --xi2");
        }
        const CorrelatedNoiseSpec spec{layer_xi1, layer_xi2, layer_n};
        const double xi = matched_flip_probability(layer_xi1, layer_xi2);
        d.columns = {"n", "xi1", "xi2", "matched_xi", "eta_ind", "eta_wc_leading", "eta_wc_exact",
                     "ordering_preserved"};
        d.rows.push_back({std::int64_t{layer_n}, layer_xi1, layer_xi2, xi,
                          independent_layer_bound({xi, layer_n}),
                          correlated_layer_bound_leading(spec),
                          theorem1_bound_hamming(correlated_layer_channel(spec), layer_n).eta,
                          std::string(correlated_term_ordering_preserved(spec) ? "true" : "false")});
      } else {
        if (layer_xi < 0.0) throw std::invalid_argument("--xi is required");
        const LayerNoiseSpec spec{layer_xi, layer_n};
        d.columns = {"n", "xi", "eta_closed_form", "eta_exact"};
        d.rows.push_back({std::int64_t{layer_n}, layer_xi, independent_layer_bound(spec),
                          theorem1_bound_hamming(independent_layer_channel(spec), layer_n).eta});
      }
      emit.dataset(d, err);
    };
  });

  // nn ...
  auto* nn = app.add_subcommand("nn", "Noisy threshold networks")->require_subcommand(1);
  std::string net_path;
  std::string px_path;
  std::size_t mc_trials = 100000;
  int width_cap = kDefaultWidthCap;
  bool force_mc = false;
  auto* nn_mi = nn->add_subcommand("mi", "Input-output mutual information of a network file");
  nn_mi->add_option("netfile", net_path)->required();
  nn_mi->add_option("--px", px_path, "Input distribution file (default uniform)");
  nn_mi->add_option("--trials", mc_trials, "Monte Carlo trials when widths exceed the cap");
  nn_mi->add_option("--cap", width_cap, "Largest layer width handled exactly");
  nn_mi->add_flag("--monte-carlo", force_mc, "Use the sampled estimator even below the cap");
  nn_mi->callback([&] {
    action = [&] {
      const NoisyNetwork net = load_network(net_path);
      const Distribution px = px_path.empty()
                                  ? Distribution::uniform(std::size_t{1} << net.input_width())
                                  : load_distribution(px_path);
      const double h_bits = entropy(px, LogBase::kBits);
      const auto widths = net.widths();
      const bool exact_ok =
          !force_mc && net.input_width() <= width_cap &&
          std::all_of(widths.begin(), widths.end(), [&](int w) { return w <= width_cap; });
      Dataset d;
      d.columns = {"method", "mi_bits", "stderr_bits", "h_x_bits", "theorem2_bound_bits"};
      const double bound = theorem2_bound(widths, net.xi(), h_bits);
      if (exact_ok) {
        d.rows.push_back({std::string("exact"),
                          exact_io_mutual_information(net, px, LogBase::kBits, width_cap), 0.0,
                          h_bits, bound});
      } else {
        const auto est = monte_carlo_io_mi(net, px, mc_trials, g.seed, LogBase::kBits);
        d.rows.push_back({std::string("monte-carlo-plugin"), est.estimate, est.standard_error,
                          h_bits, bound});
        d.notes.push_back("trials: " + std::to_string(est.trials) +
                          " (plug-in estimate, biased upward)");
      }
      emit.dataset(d, err);
    };
  });

  std::string widths_spec;
  double nn_xi = 0.0;
  double nn_hx = 1.0;
  auto* nn_bound = nn->add_subcommand("bound", "Information decay bound for given layer widths");
  nn_bound->add_option("--widths", widths_spec, "Comma-separated layer widths")->required();
  nn_bound->add_option("--xi", nn_xi)->required();
  nn_bound->add_option("--hx", nn_hx, "Input entropy H(X)");
  nn_bound->callback([&] {
    action = [&] {
      const auto widths = parse_int_list(widths_spec);
      Dataset d;
      d.columns = {"widths", "xi", "h_x", "bound"};
      std::string joined;
      for (int w : widths) joined += (joined.empty() ? "" : ";") + std::to_string(w);
      d.rows.push_back({joined, nn_xi, nn_hx, theorem2_bound(widths, nn_xi, nn_hx)});
      emit.dataset(d, err);
    };
  });

  double nn_delta = 0.0;
  bool feature_extractor = false;
  auto* nn_feasible = nn->add_subcommand("feasible", "Reliability feasibility for hidden widths");
  nn_feasible->add_option("--widths", widths_spec, "Hidden-layer widths")->required();
  nn_feasible->add_option("--xi", nn_xi)->required();
  nn_feasible->add_option("--delta", nn_delta)->required();
  nn_feasible->add_flag("--feature-extractor", feature_extractor,
                        "Widths cover all layers and no output-neuron factor is applied");
  nn_feasible->callback([&] {
    action = [&] {
      const auto f = feasibility_check(parse_int_list(widths_spec), nn_xi, nn_delta,
                                       feature_extractor);
      Dataset d;
      d.columns = {"feasible", "lhs", "capacity", "margin"};
      d.rows.push_back({std::string(f.feasible ? "true" : "false"), f.lhs, f.capacity, f.margin});
      emit.dataset(d, err);
      if (!f.feasible) throw Infeasible("infeasible: surviving information below Delta");
    };
  });

  int nn_layers = 2;
  auto* nn_min = nn->add_subcommand("min-neurons", "Lower bound on hidden noisy neurons");
  nn_min->add_option("--xi", nn_xi)->required();
  nn_min->add_option("--delta", nn_delta)->required();
  nn_min->add_option("--layers", nn_layers)->required();
  nn_min->callback([&] {
    action = [&] {
      const MinNeurons m = min_neurons_lower_bound(nn_xi, nn_delta, nn_layers);
      Dataset d;
      d.columns = {"xi", "delta", "L", "N_s"};
      d.rows.push_back({nn_xi, nn_delta, std::int64_t{nn_layers},
                        m.feasible ? Cell(m.n_s) : Cell(std::string("inf"))});
      emit.dataset(d, err);
      if (!m.feasible) throw Infeasible("infeasible: the output neuron alone loses too much");
    };
  });

  double nn_inputs = 5e8;
  int max_depth = 6;
  auto* nn_trade = nn->add_subcommand("tradeoff", "Depth tradeoff for parity");
  nn_trade->add_option("--n", nn_inputs, "Parity input count")->required();
  nn_trade->add_option("--xi", nn_xi)->required();
  nn_trade->add_option("--delta", nn_delta)->required();
  nn_trade->add_option("--max-depth", max_depth)->required();
  nn_trade->callback([&] {
    action = [&] {
      try {
        emit.dataset(figure6(nn_inputs, nn_xi, nn_delta, max_depth), err);
      } catch (const std::domain_error& e) {
        throw Infeasible(e.what());
      }
    };
  });

  // mem ...
  auto* mem = app.add_subcommand("mem", "Fault-tolerant memory bounds")->require_subcommand(1);
  int mem_n = 9;
  double mem_xi = 0.0;
  double mem_delta = 0.0;
  int mem_t = 1;
  std::size_t mem_trials = 100000;
  auto* mem_overhead = mem->add_subcommand("overhead", "Lower bound on physical bits");
  mem_overhead->add_option("--delta", mem_delta)->required();
  mem_overhead->add_option("--T", mem_t)->required();
  mem_overhead->add_option("--xi", mem_xi)->required();
  mem_overhead->callback([&] {
    action = [&] {
      Dataset d;
      d.columns = {"delta", "T", "xi", "n_lower"};
      d.rows.push_back({mem_delta, std::int64_t{mem_t}, mem_xi,
                        overhead_lower_bound(mem_delta, mem_t, mem_xi)});
      emit.dataset(d, err);
    };
  });

  auto* mem_relax = mem->add_subcommand("relax", "Upper bound on relaxation time");
  mem_relax->add_option("--n", mem_n)->required();
  mem_relax->add_option("--xi", mem_xi)->required();
  mem_relax->add_option("--delta", mem_delta)->required();
  mem_relax->callback([&] {
    action = [&] {
      const auto r = relaxation_upper_bound(mem_n, mem_xi, mem_delta);
      Dataset d;
      d.columns = {"n", "xi", "delta", "T_upper", "T_upper_asymptotic"};
      d.rows.push_back({std::int64_t{mem_n}, mem_xi, mem_delta, r.bound, r.asymptotic});
      emit.dataset(d, err);
    };
  });

  auto* mem_rep = mem->add_subcommand("reptime", "Relaxation time of repetition coding");
  mem_rep->add_option("--n", mem_n)->required();
  mem_rep->add_option("--xi", mem_xi)->required();
  mem_rep->add_option("--delta", mem_delta)->required();
  mem_rep->callback([&] {
    action = [&] {
      RepetitionRelaxation r;
      try {
        r = repetition_relaxation_time(mem_n, mem_xi, mem_delta);
      } catch (const std::domain_error& e) {
        throw Infeasible(e.what());
      }
      Dataset d;
      d.columns = {"n", "xi", "delta", "p_e", "p_e_chernoff", "T", "T_chernoff", "diverges"};
      d.rows.push_back({std::int64_t{mem_n}, mem_xi, mem_delta, r.p_e,
                        catastrophic_prob_chernoff(mem_n, mem_xi), r.time,
                        r.chernoff_time ? Cell(*r.chernoff_time) : Cell(std::string("none")),
                        std::string(r.diverges ? "true" : "false")});
      emit.dataset(d, err);
    };
  });

  auto* mem_sim = mem->add_subcommand("simulate", "Monte Carlo repetition memory");
  mem_sim->add_option("--n", mem_n)->required();
  mem_sim->add_option("--xi", mem_xi)->required();
  mem_sim->add_option("--delta", mem_delta)->required();
  mem_sim->add_option("--T", mem_t)->required();
  mem_sim->add_option("--trials", mem_trials);
  mem_sim->callback([&] {
    action = [&] {
      const auto rep = simulate_memory({mem_n, mem_xi, mem_delta, mem_t}, mem_trials, g.seed);
      if (g.format == "json") {
        nlohmann::json doc{{"invocation", g.invocation},
                           {"seed", g.seed},
                           {"spec", {{"n", mem_n}, {"xi", mem_xi}, {"delta", mem_delta}, {"T", mem_t}}},
                           {"trials", rep.trials},
                           {"success_prob", rep.success_prob},
                           {"stderr", rep.standard_error}};
        doc["estimated_relaxation"] = rep.estimated_relaxation
                                          ? nlohmann::json(*rep.estimated_relaxation)
                                          : nlohmann::json(nullptr);
        emit.text(doc.dump(2) + "\n");
        return;
      }
      emit.text("# invocation: " + g.invocation + "; seed=" + std::to_string(g.seed) + "\n" +
                rep.to_csv());
    };
  });

  // fig N
  auto* fig = app.add_subcommand("fig", "Figure datasets (2, 3, 5, 6, 8)");
  int fig_number = 0;
  std::string xi_grid = "0:0.5:0.01";
  int fig_n = 3;
  std::string xi1_grid = "0:0.07:0.005";
  double fig_xi2 = 0.35;
  std::string delta_list = "0.1,0.2,0.3,0.4";
  std::string layer_list = "2,3,4,5";
  double fig_inputs = 5e8;
  double fig_xi = 0.37;
  double fig_delta = 0.4;
  int fig_depth = 6;
  std::string t_grid = "1:100:1";
  std::string pairs_spec = "0.4:0.1,0.1:0.3";
  std::string gnuplot_path;
  fig->add_option("number", fig_number)->required()->check(CLI::IsMember({2, 3, 5, 6, 8}));
  fig->add_option("--xi-grid", xi_grid, "fig 2/5: xi grid, start:stop:step or a list");
  fig->add_option("--n", fig_n, "fig 2: neurons per layer; fig 3: layer width");
  fig->add_option("--xi1-grid", xi1_grid, "fig 3: shared-noise grid");
  fig->add_option("--xi2", fig_xi2, "fig 3: independent noise");
  fig->add_option("--delta-list", delta_list, "fig 5: reliability levels");
  fig->add_option("--layers-list", layer_list, "fig 5: depths");
  fig->add_option("--inputs", fig_inputs, "fig 6: parity input count");
  fig->add_option("--xi", fig_xi, "fig 6: neuron noise");
  fig->add_option("--delta", fig_delta, "fig 6: reliability");
  fig->add_option("--max-depth", fig_depth, "fig 6: largest depth");
  fig->add_option("--T-grid", t_grid, "fig 8: interval counts");
  fig->add_option("--pairs", pairs_spec, "fig 8: delta:xi pairs, comma-separated");
  fig->add_option("--gnuplot", gnuplot_path, "Also write a gnuplot script to this path");
  fig->callback([&] {
    action = [&] {
      Dataset d;
      switch (fig_number) {
        case 2:
          d = figure2(parse_grid(xi_grid), fig_n);
          break;
        case 3:
          if (fig->count("--n") == 0) fig_n = 5;
          d = figure3(parse_grid(xi1_grid), fig_xi2, fig_n);
          break;
        case 5:
          d = figure5(parse_grid(xi_grid == "0:0.5:0.01" ? "0.01:0.49:0.01" : xi_grid),
                      parse_grid(delta_list), parse_int_list(layer_list));
          break;
        case 6:
          try {
            d = figure6(fig_inputs, fig_xi, fig_delta, fig_depth);
          } catch (const std::domain_error& e) {
            throw Infeasible(e.what());
          }
          break;
        case 8: {
          std::vector<std::pair<double, double>> pairs;
          std::string_view rest = pairs_spec;
          while (!rest.empty()) {
            const auto comma = rest.find(',');
            const auto item = rest.substr(0, comma);
            const auto colon = item.find(':');
            if (colon == std::string_view::npos) {
              throw std::invalid_argument("--pairs entries must be delta:xi");
            }
            pairs.emplace_back(parse_grid(item.substr(0, colon)).at(0),
                               parse_grid(item.substr(colon + 1)).at(0));
            rest.remove_prefix(comma == std::string_view::npos ? rest.size() : comma + 1);
          }
          d = figure8(parse_int_list(t_grid), pairs);
          break;
        }
      }
      emit.dataset(d, err);
      if (!gnuplot_path.empty()) {
        std::ofstream f(gnuplot_path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot write " + gnuplot_path);
        f << gnuplot_script(fig_number, g.out_path.empty() ? "data.csv" : g.out_path);
      }
    };
  });

  // verify <suite>
  auto* verify = app.add_subcommand("verify", "Run a fuzz/oracle suite");
  std::string suite;
  std::size_t budget = 0;
  verify->add_option("suite", suite, "sdpi-fuzz, appendix-identity, prop1-equality, "
                                     "memory-sandwich, theorem2-networks")
      ->required();
  verify->add_option("--budget", budget, "Random cases to draw (0 = suite default)");
  int verify_code = kOk;
  verify->callback([&] {
    action = [&] {
      if (!is_suite(suite)) throw std::invalid_argument("unknown suite '" + suite + "'");
      const SuiteResult r = run_suite(suite, g.seed, budget);
      auto doc = r.to_json();
      doc["seed"] = g.seed;
      doc["invocation"] = g.invocation;
      emit.text(doc.dump() + "\n");
      verify_code = r.pass ? kOk : kInfeasible;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (action) action();
    return verify_code;
  } catch (const Infeasible& e) {
    err << e.what() << "\n";
    return kInfeasible;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::domain_error& e) {
    err << e.what() << "\n";
    return kInfeasible;
  }
}

}  // namespace sdpi::cli
