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

#ifndef SDPI_NETWORK_H
#define SDPI_NETWORK_H

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sdpi/info.h"
#include "sdpi/rng.h"

namespace sdpi {

/// Binary threshold unit: fires 1 iff sum_i w_i x_i + bias >= 0.
struct ThresholdNeuron {
  std::vector<double> weights;
  double bias = 0.0;
};

using Layer = std::vector<ThresholdNeuron>;

/// Pre-noise output for input bits x (each 0 or 1). sgn(0) = 1.
int neuron_fire(const ThresholdNeuron& neuron, std::span<const int> x);

/// Same, reading x_i from bit i of `state`.
int neuron_fire(const ThresholdNeuron& neuron, std::uint64_t state);

/// Pre-noise outputs of a whole layer packed little-endian.
std::uint64_t layer_fire(const Layer& layer, std::uint64_t state);

/// Simply layered feed-forward network of xi-noisy threshold neurons. Every
/// neuron in layer l reads all outputs of layer l-1 (layer 0 is the input);
/// after firing, each output flips independently with probability xi.
class NoisyNetwork {
 public:
  NoisyNetwork(int input_width, double xi, std::vector<Layer> layers);

  int input_width() const { return input_width_; }
  double xi() const { return xi_; }
  const std::vector<Layer>& layers() const { return layers_; }
  std::size_t depth() const { return layers_.size(); }
  /// Width of every layer, input excluded.
  std::vector<int> widths() const;
  /// Fan-in of layer l (0-based).
  int fan_in(std::size_t l) const;

 private:
  int input_width_;
  double xi_;
  std::vector<Layer> layers_;
};

/// JSON network format:
///   {"xi": 0.1, "input_width": 3,
///    "layers": [{"neurons": [{"weights": [...], "bias": -0.5}, ...]}, ...]}
/// Input bit i is bit i of the input state index (little-endian), and the
/// same convention packs layer outputs.
NoisyNetwork parse_network_json(std::string_view text);
NoisyNetwork load_network(const std::filesystem::path& path);
std::string network_to_json(const NoisyNetwork& net);

inline constexpr int kDefaultWidthCap = 14;

/// 2^fan_in x 2^width channel: deterministic threshold outputs followed by
/// BSC(xi) on every output bit. Throws std::invalid_argument when the fan-in
/// or width exceeds `cap`.
Channel layer_channel(const Layer& layer, int fan_in, double xi, int cap = kDefaultWidthCap);

/// Composition of every layer channel: input state -> output state.
Channel end_to_end_channel(const NoisyNetwork& net, int cap = kDefaultWidthCap);

/// Exact I(X; Y_out) for input distribution p_X over 2^input_width states.
double exact_io_mutual_information(const NoisyNetwork& net, const Distribution& px,
                                   LogBase base = LogBase::kNats, int cap = kDefaultWidthCap);

/// Plug-in estimate of I(X; Y_out) from sampled forward passes. Biased
/// upward by roughly (#cells - #rows - #cols + 1) / (2 trials) nats; the
/// bias is not corrected. The standard error is the delta-method value
/// sqrt((E[i^2] - I^2) / trials) with i the pointwise information.
struct MonteCarloEstimate {
  double estimate = 0.0;
  double standard_error = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
};

MonteCarloEstimate monte_carlo_io_mi(const NoisyNetwork& net, const Distribution& px,
                                     std::size_t trials, std::uint64_t seed,
                                     LogBase base = LogBase::kNats);

/// Random network for adversarial testing: weights uniform in [-1, 1],
/// biases uniform in [-fan_in/2, fan_in/2].
NoisyNetwork random_network(Stream& rng, int input_width, std::span<const int> widths, double xi);

}  // namespace sdpi

#endif  // SDPI_NETWORK_H
