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

#include "sdpi/network.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>
#include <utility>

#include "json.hpp"
#include "sdpi/channel_io.h"

namespace sdpi {

namespace {

constexpr int kMaxPackedWidth = 63;

void check_xi(double xi) {
  if (!(xi >= 0.0 && xi < 0.5)) {
    throw std::invalid_argument("neuron flip probability xi must lie in [0, 0.5)");
  }
}

}  // namespace

int neuron_fire(const ThresholdNeuron& neuron, std::span<const int> x) {
  if (x.size() != neuron.weights.size()) {
    throw std::invalid_argument("neuron has " + std::to_string(neuron.weights.size()) +
                                " weights but got " + std::to_string(x.size()) + " inputs");
  }
  double a = neuron.bias;
  for (std::size_t i = 0; i < x.size(); ++i) {
    a += neuron.weights[i] * x[i];
  }
  return a >= 0.0 ? 1 : 0;
}

int neuron_fire(const ThresholdNeuron& neuron, std::uint64_t state) {
  double a = neuron.bias;
  for (std::size_t i = 0; i < neuron.weights.size(); ++i) {
    a += neuron.weights[i] * static_cast<double>((state >> i) & 1U);
  }
  return a >= 0.0 ? 1 : 0;
}

std::uint64_t layer_fire(const Layer& layer, std::uint64_t state) {
  std::uint64_t out = 0;
  for (std::size_t k = 0; k < layer.size(); ++k) {
    out |= static_cast<std::uint64_t>(neuron_fire(layer[k], state)) << k;
  }
  return out;
}

NoisyNetwork::NoisyNetwork(int input_width, double xi, std::vector<Layer> layers)
    : input_width_(input_width), xi_(xi), layers_(std::move(layers)) {
  check_xi(xi_);
  if (input_width_ < 1 || input_width_ > kMaxPackedWidth) {
    throw std::invalid_argument("input width must lie in [1, 63]");
  }
  if (layers_.empty()) {
    throw std::invalid_argument("network needs at least one layer");
  }
  std::size_t prev = static_cast<std::size_t>(input_width_);
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    if (layers_[l].empty() || layers_[l].size() > kMaxPackedWidth) {
      throw std::invalid_argument("layer " + std::to_string(l) + " width must lie in [1, 63]");
    }
    for (std::size_t k = 0; k < layers_[l].size(); ++k) {
      if (layers_[l][k].weights.size() != prev) {
        throw std::invalid_argument("layer " + std::to_string(l) + " neuron " +
                                    std::to_string(k) + " has " +
                                    std::to_string(layers_[l][k].weights.size()) +
                                    " weights, previous layer has width " + std::to_string(prev));
      }
    }
    prev = layers_[l].size();
  }
}

std::vector<int> NoisyNetwork::widths() const {
  std::vector<int> w;
  for (const auto& layer : layers_) w.push_back(static_cast<int>(layer.size()));
  return w;
}

int NoisyNetwork::fan_in(std::size_t l) const {
  return l == 0 ? input_width_ : static_cast<int>(layers_[l - 1].size());
}

NoisyNetwork parse_network_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("network JSON: ") + e.what());
  }
  try {
    std::vector<Layer> layers;
    for (const auto& jl : doc.at("layers")) {
      Layer layer;
      for (const auto& jn : jl.at("neurons")) {
        layer.push_back({jn.at("weights").get<std::vector<double>>(), jn.at("bias").get<double>()});
      }
      layers.push_back(std::move(layer));
    }
    return NoisyNetwork(doc.at("input_width").get<int>(), doc.at("xi").get<double>(),
                        std::move(layers));
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("network JSON: ") + e.what());
  }
}

NoisyNetwork load_network(const std::filesystem::path& path) {
  return parse_network_json(read_file(path));
}

std::string network_to_json(const NoisyNetwork& net) {
  nlohmann::json layers = nlohmann::json::array();
  for (const auto& layer : net.layers()) {
    nlohmann::json neurons = nlohmann::json::array();
    for (const auto& n : layer) {
      neurons.push_back({{"weights", n.weights}, {"bias", n.bias}});
    }
    layers.push_back({{"neurons", neurons}});
  }
  return nlohmann::json{{"xi", net.xi()}, {"input_width", net.input_width()}, {"layers", layers}}
      .dump();
}

Channel layer_channel(const Layer& layer, int fan_in, double xi, int cap) {
  check_xi(xi);
  const int width = static_cast<int>(layer.size());
  if (width < 1) throw std::invalid_argument("layer_channel: empty layer");
  if (width > cap || fan_in > cap) {
    throw std::invalid_argument("layer_channel: width " + std::to_string(width) + " or fan-in " +
                                std::to_string(fan_in) + " exceeds cap " + std::to_string(cap));
  }
  for (const auto& n : layer) {
    if (static_cast<int>(n.weights.size()) != fan_in) {
      throw std::invalid_argument("layer_channel: neuron fan-in does not match");
    }
  }
  const std::size_t rows = std::size_t{1} << fan_in;
  const std::size_t cols = std::size_t{1} << width;
  std::vector<double> by_distance(width + 1);
  for (int d = 0; d <= width; ++d) {
    by_distance[d] = std::pow(xi, d) * std::pow(1.0 - xi, width - d);
  }
  std::vector<double> data(rows * cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const std::uint64_t y = layer_fire(layer, r);
    for (std::size_t s = 0; s < cols; ++s) {
      data[r * cols + s] = by_distance[std::popcount(y ^ s)];
    }
  }
  return Channel(rows, cols, std::move(data));
}

Channel end_to_end_channel(const NoisyNetwork& net, int cap) {
  Channel total = layer_channel(net.layers().front(), net.fan_in(0), net.xi(), cap);
  for (std::size_t l = 1; l < net.depth(); ++l) {
    total = compose(total, layer_channel(net.layers()[l], net.fan_in(l), net.xi(), cap));
  }
  return total;
}

double exact_io_mutual_information(const NoisyNetwork& net, const Distribution& px,
                                   LogBase base, int cap) {
  if (px.size() != (std::size_t{1} << net.input_width())) {
    throw std::invalid_argument("input distribution must cover 2^input_width states");
  }
  return mutual_information(px, end_to_end_channel(net, cap), base);
}

MonteCarloEstimate monte_carlo_io_mi(const NoisyNetwork& net, const Distribution& px,
                                     std::size_t trials, std::uint64_t seed, LogBase base) {
  if (trials < 1) throw std::invalid_argument("monte_carlo_io_mi: need at least one trial");
  if (px.size() != (std::size_t{1} << net.input_width())) {
    throw std::invalid_argument("input distribution must cover 2^input_width states");
  }
  std::vector<double> cdf(px.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < px.size(); ++i) {
    acc += px[i];
    cdf[i] = acc;
  }

  std::map<std::pair<std::uint64_t, std::uint64_t>, std::uint64_t> counts;
  for (std::size_t t = 0; t < trials; ++t) {
    Stream rng(seed, t);
    const double u = rng.uniform() * acc;
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    const std::uint64_t x =
        static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(it - cdf.begin(), cdf.size() - 1));
    std::uint64_t state = x;
    for (const auto& layer : net.layers()) {
      std::uint64_t next = layer_fire(layer, state);
      for (std::size_t k = 0; k < layer.size(); ++k) {
        if (rng.bernoulli(net.xi())) next ^= std::uint64_t{1} << k;
      }
      state = next;
    }
    ++counts[{x, state}];
  }

  std::map<std::uint64_t, std::uint64_t> nx;
  std::map<std::uint64_t, std::uint64_t> ny;
  for (const auto& [key, c] : counts) {
    nx[key.first] += c;
    ny[key.second] += c;
  }
  const double total = static_cast<double>(trials);
  double mean = 0.0;
  double second = 0.0;
  for (const auto& [key, c] : counts) {
    const double pointwise = std::log(static_cast<double>(c) * total /
                                      (static_cast<double>(nx[key.first]) *
                                       static_cast<double>(ny[key.second])));
    const double w = static_cast<double>(c) / total;
    mean += w * pointwise;
    second += w * pointwise * pointwise;
  }
  const double var = std::max(second - mean * mean, 0.0);
  return MonteCarloEstimate{
      .estimate = to_base(std::max(mean, 0.0), base),
      .standard_error = to_base(std::sqrt(var / total), base),
      .trials = trials,
      .seed = seed,
  };
}

NoisyNetwork random_network(Stream& rng, int input_width, std::span<const int> widths, double xi) {
  std::vector<Layer> layers;
  int fan_in = input_width;
  for (int w : widths) {
    Layer layer;
    for (int k = 0; k < w; ++k) {
      ThresholdNeuron n;
      for (int i = 0; i < fan_in; ++i) n.weights.push_back(2.0 * rng.uniform() - 1.0);
      n.bias = fan_in * (rng.uniform() - 0.5);
      layer.push_back(std::move(n));
    }
    layers.push_back(std::move(layer));
    fan_in = w;
  }
  return NoisyNetwork(input_width, xi, std::move(layers));
}

}  // namespace sdpi
