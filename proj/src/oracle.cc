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

#include "sdpi/oracle.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "sdpi/contraction.h"

namespace sdpi {

namespace {

struct Candidate {
  std::vector<double> px;
  std::vector<double> c_xy;  // row-major |X| x |Y|
};

std::optional<double> evaluate(const Candidate& cand, std::size_t nx, std::size_t ny,
                               const Channel& c_yz) {
  return contraction_ratio(Distribution(cand.px), Channel(nx, ny, cand.c_xy), c_yz);
}

void renormalize(std::span<double> v) {
  double sum = 0.0;
  for (double x : v) sum += x;
  for (double& x : v) x /= sum;
}

}  // namespace

std::optional<double> contraction_ratio(const Distribution& px, const Channel& c_xy,
                                        const Channel& c_yz) {
  const double i_xy = mutual_information(px, c_xy);
  if (i_xy < kMinInformation) return std::nullopt;
  const double i_xz = mutual_information(px, compose(c_xy, c_yz));
  return i_xz / i_xy;
}

Channel random_channel(Stream& rng, std::size_t n_inputs, std::size_t m_outputs) {
  std::vector<double> data;
  data.reserve(n_inputs * m_outputs);
  for (std::size_t i = 0; i < n_inputs; ++i) {
    auto row = rng.simplex(m_outputs);
    data.insert(data.end(), row.begin(), row.end());
  }
  return Channel(n_inputs, m_outputs, std::move(data));
}

RandomChain random_chain(Stream& rng, std::size_t max_alphabet) {
  if (max_alphabet < 2) {
    throw std::invalid_argument("random_chain: alphabets need at least two symbols");
  }
  const auto pick = [&] { return 2 + static_cast<std::size_t>(rng.next() % (max_alphabet - 1)); };
  const std::size_t nx = pick();
  const std::size_t ny = pick();
  const std::size_t nz = pick();
  Distribution px(rng.simplex(nx));
  Channel c_xy = random_channel(rng, nx, ny);
  Channel c_yz = random_channel(rng, ny, nz);
  return {std::move(px), std::move(c_xy), std::move(c_yz)};
}

std::string EmpiricalContraction::to_json() const {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < best_channel_xy.n_inputs(); ++i) {
    auto r = best_channel_xy.row(i);
    rows.push_back(std::vector<double>(r.begin(), r.end()));
  }
  return nlohmann::json{{"achieved_ratio", achieved_ratio},
                        {"bound_eta", bound_eta},
                        {"gap", bound_eta - achieved_ratio},
                        {"seed", seed},
                        {"samples", samples},
                        {"used", used},
                        {"skipped", skipped},
                        {"best_px", std::vector<double>(best_px.probs().begin(),
                                                        best_px.probs().end())},
                        {"best_channel_xy", rows}}
      .dump();
}

EmpiricalContraction empirical_contraction(const Channel& c_yz, const OracleConfig& config) {
  if (config.x_alphabet < 2 || config.x_alphabet > 4) {
    throw std::invalid_argument("empirical_contraction: |X| must be between 2 and 4");
  }
  if (config.samples < 1) {
    throw std::invalid_argument("empirical_contraction: need at least one sample");
  }
  const std::size_t nx = config.x_alphabet;
  const std::size_t ny = c_yz.n_inputs();

  std::optional<Candidate> best;
  double best_ratio = -1.0;
  std::size_t used = 0;
  std::size_t skipped = 0;
  for (std::size_t i = 0; i < config.samples; ++i) {
    Stream rng(config.seed, i);
    Candidate cand;
    cand.px = rng.simplex(nx);
    for (std::size_t r = 0; r < nx; ++r) {
      auto row = rng.simplex(ny);
      cand.c_xy.insert(cand.c_xy.end(), row.begin(), row.end());
    }
    const auto ratio = evaluate(cand, nx, ny, c_yz);
    if (!ratio) {
      ++skipped;
      continue;
    }
    ++used;
    if (*ratio > best_ratio) {
      best_ratio = *ratio;
      best = std::move(cand);
    }
  }
  if (!best) {
    throw std::domain_error("empirical_contraction: all samples degenerate (0 samples used)");
  }

  // Accept-if-better refinement. Streams are indexed past the sampling range.
  double step = 0.25;
  for (std::size_t s = 0; s < config.refine_steps; ++s) {
    Stream rng(config.seed, config.samples + s);
    Candidate trial = *best;
    const double u = rng.uniform();
    if (u < 0.3) {
      // Pull all rows toward the p_X-weighted mean row.
      const double lambda = step * rng.uniform();
      std::vector<double> mean(ny, 0.0);
      for (std::size_t r = 0; r < nx; ++r)
        for (std::size_t j = 0; j < ny; ++j) mean[j] += trial.px[r] * trial.c_xy[r * ny + j];
      for (std::size_t r = 0; r < nx; ++r)
        for (std::size_t j = 0; j < ny; ++j)
          trial.c_xy[r * ny + j] = (1.0 - lambda) * trial.c_xy[r * ny + j] + lambda * mean[j];
    } else if (u < 0.5) {
      const std::size_t k = rng.next() % nx;
      trial.px[k] *= std::exp(step * (2.0 * rng.uniform() - 1.0));
      renormalize(trial.px);
    } else {
      const std::size_t r = rng.next() % nx;
      const std::size_t j = rng.next() % ny;
      trial.c_xy[r * ny + j] *= std::exp(step * (2.0 * rng.uniform() - 1.0));
      renormalize(std::span<double>(trial.c_xy).subspan(r * ny, ny));
    }
    // Refinement tends to shrink I(X;Y); below the floor the ratio is mostly
    // cancellation error and can drift past the true supremum.
    if (mutual_information(Distribution(trial.px), Channel(nx, ny, trial.c_xy)) < kRefineMinInformation) {
      step = std::max(step * 0.98, 1e-3);
      continue;
    }
    const auto ratio = evaluate(trial, nx, ny, c_yz);
    if (ratio && *ratio > best_ratio) {
      best_ratio = *ratio;
      best = std::move(trial);
      step = std::min(step * 1.2, 0.5);
    } else {
      step = std::max(step * 0.98, 1e-3);
    }
  }

  return EmpiricalContraction{
      .achieved_ratio = std::clamp(best_ratio, 0.0, 1.0),
      .best_px = Distribution(best->px),
      .best_channel_xy = Channel(nx, ny, best->c_xy),
      .samples = config.samples,
      .used = used,
      .skipped = skipped,
      .seed = config.seed,
      .bound_eta = theorem1_bound(c_yz).eta,
  };
}

}  // namespace sdpi
