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

#ifndef SDPI_INFO_H
#define SDPI_INFO_H

#include <cstddef>
#include <span>
#include <vector>

namespace sdpi {

/// Entries with magnitude below this are treated as exact zeros when taking logs.
inline constexpr double kLogZero = 1e-15;

/// Constructors renormalize when a sum is off by less than this and reject otherwise.
inline constexpr double kNormalizeTolerance = 1e-9;

enum class LogBase { kNats, kBits };

/// Converts a quantity measured in nats to the requested base.
double to_base(double nats, LogBase base);

/// Probability vector over a finite alphabet.
///
/// Entries are non-negative and sum to 1. Inputs whose sum deviates from 1
/// by less than `kNormalizeTolerance` are renormalized; anything else throws
/// std::invalid_argument.
class Distribution {
 public:
  explicit Distribution(std::vector<double> probs);

  static Distribution uniform(std::size_t n);
  static Distribution point_mass(std::size_t n, std::size_t index);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probs() const { return probs_; }
  double min_entry() const;

 private:
  std::vector<double> probs_;
};

/// Row-stochastic transition matrix. Row i is the output distribution given
/// input i. Storage is row-major.
class Channel {
 public:
  Channel(std::size_t n_inputs, std::size_t m_outputs, std::vector<double> row_major);
  explicit Channel(const std::vector<std::vector<double>>& rows);

  static Channel identity(std::size_t n);
  static Channel bsc(double p);
  /// Every input maps to the same output distribution.
  static Channel constant(const Distribution& row, std::size_t n_inputs);

  std::size_t n_inputs() const { return n_; }
  std::size_t m_outputs() const { return m_; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * m_ + j]; }
  std::span<const double> row(std::size_t i) const {
    return std::span<const double>(data_).subspan(i * m_, m_);
  }
  std::span<const double> data() const { return data_; }

 private:
  std::size_t n_;
  std::size_t m_;
  std::vector<double> data_;
};

/// Joint distribution p(x, y) with cached marginals.
class JointDistribution {
 public:
  JointDistribution(std::size_t rows, std::size_t cols, std::vector<double> table);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t i, std::size_t j) const { return table_[i * cols_ + j]; }
  std::span<const double> table() const { return table_; }
  const Distribution& marginal_x() const { return marginal_x_; }
  const Distribution& marginal_y() const { return marginal_y_; }

  /// Swaps the roles of X and Y.
  JointDistribution transposed() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> table_;
  Distribution marginal_x_;
  Distribution marginal_y_;
};

/// Shannon entropy of a probability vector with 0 log 0 = 0, in nats.
double entropy_nats(std::span<const double> probs);

double entropy(const Distribution& d, LogBase base = LogBase::kNats);

/// p_Y = p_X A.
Distribution push_forward(const Distribution& d, const Channel& c);

JointDistribution joint(const Distribution& d, const Channel& c);

/// I(X;Y) = H(X) + H(Y) - H(X,Y). Rounding-level negatives are clamped to 0.
double mutual_information(const JointDistribution& j, LogBase base = LogBase::kNats);

/// Shorthand for mutual_information(joint(d, c)).
double mutual_information(const Distribution& d, const Channel& c,
                          LogBase base = LogBase::kNats);

/// Matrix product: the channel X -> Z of the chain X -> Y -> Z.
Channel compose(const Channel& first, const Channel& second);

/// Kronecker product of two channels acting on independent symbols. The
/// symbol of `low` is the lower-order digit of the combined index, i.e.
/// combined = low_index + low_size * high_index.
Channel tensor(const Channel& low, const Channel& high);

}  // namespace sdpi

#endif  // SDPI_INFO_H
