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

#include "sdpi/info.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sdpi {

namespace {

// Validates non-negativity and renormalizes a slice that should sum to 1.
// `what` names the slice in error messages.
void normalize_in_place(std::span<double> values, const std::string& what) {
  if (values.empty()) {
    throw std::invalid_argument(what + " is empty");
  }
  double sum = 0.0;
  for (double v : values) {
    if (!std::isfinite(v) || v < 0.0) {
      throw std::invalid_argument(what + " has a negative or non-finite entry");
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) >= kNormalizeTolerance) {
    throw std::invalid_argument(what + " sums to " + std::to_string(sum) + ", expected 1");
  }
  for (double& v : values) {
    v /= sum;
  }
}

double xlogx(double p) { return p < kLogZero ? 0.0 : p * std::log(p); }

}  // namespace

double to_base(double nats, LogBase base) {
  return base == LogBase::kBits ? nats / std::numbers::ln2 : nats;
}

Distribution::Distribution(std::vector<double> probs) : probs_(std::move(probs)) {
  normalize_in_place(probs_, "distribution");
}

Distribution Distribution::uniform(std::size_t n) {
  if (n == 0) {
    throw std::invalid_argument("uniform distribution needs a non-empty alphabet");
  }
  return Distribution(std::vector<double>(n, 1.0 / static_cast<double>(n)));
}

Distribution Distribution::point_mass(std::size_t n, std::size_t index) {
  if (index >= n) {
    throw std::invalid_argument("point mass index out of range");
  }
  std::vector<double> p(n, 0.0);
  p[index] = 1.0;
  return Distribution(std::move(p));
}

double Distribution::min_entry() const { return *std::min_element(probs_.begin(), probs_.end()); }

Channel::Channel(std::size_t n_inputs, std::size_t m_outputs, std::vector<double> row_major)
    : n_(n_inputs), m_(m_outputs), data_(std::move(row_major)) {
  if (n_ == 0 || m_ == 0) {
    throw std::invalid_argument("channel dimensions must be positive");
  }
  if (data_.size() != n_ * m_) {
    throw std::invalid_argument("channel data has " + std::to_string(data_.size()) +
                                " entries, expected " + std::to_string(n_ * m_));
  }
  for (std::size_t i = 0; i < n_; ++i) {
    normalize_in_place(std::span<double>(data_).subspan(i * m_, m_),
                       "channel row " + std::to_string(i));
  }
}

Channel::Channel(const std::vector<std::vector<double>>& rows)
    : Channel(rows.size(), rows.empty() ? 0 : rows.front().size(), [&rows] {
        std::vector<double> flat;
        for (std::size_t i = 0; i < rows.size(); ++i) {
          if (rows[i].size() != rows.front().size()) {
            throw std::invalid_argument("channel row " + std::to_string(i) + " has " +
                                        std::to_string(rows[i].size()) + " entries, expected " +
                                        std::to_string(rows.front().size()));
          }
          flat.insert(flat.end(), rows[i].begin(), rows[i].end());
        }
        return flat;
      }()) {}

Channel Channel::identity(std::size_t n) {
  std::vector<double> data(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    data[i * n + i] = 1.0;
  }
  return Channel(n, n, std::move(data));
}

Channel Channel::bsc(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("BSC flip probability must lie in [0, 1]");
  }
  return Channel(2, 2, {1.0 - p, p, p, 1.0 - p});
}

Channel Channel::constant(const Distribution& row, std::size_t n_inputs) {
  std::vector<double> data;
  data.reserve(n_inputs * row.size());
  for (std::size_t i = 0; i < n_inputs; ++i) {
    data.insert(data.end(), row.probs().begin(), row.probs().end());
  }
  return Channel(n_inputs, row.size(), std::move(data));
}

namespace {

std::vector<double> row_sums(std::size_t rows, std::size_t cols, std::span<const double> t) {
  std::vector<double> out(rows, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      out[i] += t[i * cols + j];
    }
  }
  return out;
}

std::vector<double> col_sums(std::size_t rows, std::size_t cols, std::span<const double> t) {
  std::vector<double> out(cols, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      out[j] += t[i * cols + j];
    }
  }
  return out;
}

std::vector<double> normalized_table(std::size_t rows, std::size_t cols, std::vector<double> t) {
  if (t.size() != rows * cols) {
    throw std::invalid_argument("joint table size does not match its dimensions");
  }
  normalize_in_place(t, "joint distribution");
  return t;
}

}  // namespace

JointDistribution::JointDistribution(std::size_t rows, std::size_t cols, std::vector<double> table)
    : rows_(rows),
      cols_(cols),
      table_(normalized_table(rows, cols, std::move(table))),
      marginal_x_(row_sums(rows_, cols_, table_)),
      marginal_y_(col_sums(rows_, cols_, table_)) {}

JointDistribution JointDistribution::transposed() const {
  std::vector<double> t(table_.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) {
      t[j * rows_ + i] = table_[i * cols_ + j];
    }
  }
  return JointDistribution(cols_, rows_, std::move(t));
}

double entropy_nats(std::span<const double> probs) {
  double h = 0.0;
  for (double p : probs) {
    h -= xlogx(p);
  }
  return std::max(h, 0.0);
}

double entropy(const Distribution& d, LogBase base) { return to_base(entropy_nats(d.probs()), base); }

Distribution push_forward(const Distribution& d, const Channel& c) {
  if (d.size() != c.n_inputs()) {
    throw std::invalid_argument("push_forward: distribution over " + std::to_string(d.size()) +
                                " symbols, channel has " + std::to_string(c.n_inputs()) +
                                " inputs");
  }
  std::vector<double> out(c.m_outputs(), 0.0);
  for (std::size_t i = 0; i < c.n_inputs(); ++i) {
    if (d[i] == 0.0) continue;
    auto row = c.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      out[j] += d[i] * row[j];
    }
  }
  return Distribution(std::move(out));
}

JointDistribution joint(const Distribution& d, const Channel& c) {
  if (d.size() != c.n_inputs()) {
    throw std::invalid_argument("joint: distribution over " + std::to_string(d.size()) +
                                " symbols, channel has " + std::to_string(c.n_inputs()) +
                                " inputs");
  }
  std::vector<double> t(c.n_inputs() * c.m_outputs());
  for (std::size_t i = 0; i < c.n_inputs(); ++i) {
    for (std::size_t j = 0; j < c.m_outputs(); ++j) {
      t[i * c.m_outputs() + j] = d[i] * c(i, j);
    }
  }
  return JointDistribution(c.n_inputs(), c.m_outputs(), std::move(t));
}

double mutual_information(const JointDistribution& j, LogBase base) {
  const double mi = entropy_nats(j.marginal_x().probs()) + entropy_nats(j.marginal_y().probs()) -
                    entropy_nats(j.table());
  return to_base(std::max(mi, 0.0), base);
}

double mutual_information(const Distribution& d, const Channel& c, LogBase base) {
  return mutual_information(joint(d, c), base);
}

Channel compose(const Channel& first, const Channel& second) {
  if (first.m_outputs() != second.n_inputs()) {
    throw std::invalid_argument("compose: first channel has " +
                                std::to_string(first.m_outputs()) +
                                " outputs, second has " + std::to_string(second.n_inputs()) +
                                " inputs");
  }
  const std::size_t n = first.n_inputs();
  const std::size_t k = first.m_outputs();
  const std::size_t m = second.m_outputs();
  std::vector<double> out(n * m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = 0; l < k; ++l) {
      const double a = first(i, l);
      if (a == 0.0) continue;
      auto row = second.row(l);
      for (std::size_t j = 0; j < m; ++j) {
        out[i * m + j] += a * row[j];
      }
    }
  }
  return Channel(n, m, std::move(out));
}

Channel tensor(const Channel& low, const Channel& high) {
  const std::size_t n_lo = low.n_inputs();
  const std::size_t m_lo = low.m_outputs();
  const std::size_t n = n_lo * high.n_inputs();
  const std::size_t m = m_lo * high.m_outputs();
  std::vector<double> out(n * m);
  for (std::size_t ih = 0; ih < high.n_inputs(); ++ih) {
    for (std::size_t il = 0; il < n_lo; ++il) {
      const std::size_t r = il + n_lo * ih;
      for (std::size_t jh = 0; jh < high.m_outputs(); ++jh) {
        for (std::size_t jl = 0; jl < m_lo; ++jl) {
          out[r * m + jl + m_lo * jh] = low(il, jl) * high(ih, jh);
        }
      }
    }
  }
  return Channel(n, m, std::move(out));
}

}  // namespace sdpi
