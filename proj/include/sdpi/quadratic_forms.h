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

#ifndef SDPI_QUADRATIC_FORMS_H
#define SDPI_QUADRATIC_FORMS_H

// Second-order machinery behind the contraction bound.
//
// For a probability vector p over n symbols, parametrized by its first n-1
// coordinates (p_n = 1 - sum of the rest), let
//
//   g(p) = H(p)        entropy of the channel input,
//   f(p) = H(p A)      entropy of the channel output.
//
// Both are concave on the open simplex. The contraction ratio I(X;Z)/I(X;Y)
// is bounded by the supremum of c'H_f c / c'H_g c, and that supremum is in
// turn bounded by the pair-scan eta. Everything here is a numerical check of
// that chain of inequalities.

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "sdpi/info.h"

namespace sdpi {

/// Hessian routines reject p with any entry below this.
inline constexpr double kInteriorThreshold = 1e-9;

/// (n-1)x(n-1) Hessian of the entropy: diagonal -(p_i + p_n)/(p_i p_n),
/// off-diagonal -1/p_n. Negative definite.
Eigen::MatrixXd hessian_g(const Distribution& p);

/// (n-1)x(n-1) Hessian of H(pA):
///   -sum_j (a_kj - a_nj)(a_lj - a_nj) / (sum_i p_i a_ij).
/// All-zero output columns are skipped. Negative semidefinite.
Eigen::MatrixXd hessian_f(const Channel& c, const Distribution& p);

/// Largest generalized eigenvalue of the pencil (H_f, H_g), i.e.
/// sup_c (c'H_f c)/(c'H_g c), clamped to [0, 1]. Computed by factoring
/// -H_g = L L', then taking the top eigenvalue of L^{-1}(-H_f)L^{-T}.
/// Throws std::domain_error when -H_g is too ill-conditioned (cond > 1e12).
double rayleigh_sup(const Channel& c, const Distribution& p);

/// Q_{s,t}(c) for 0 <= s < t < n (zero-based). Pairs with t < n-1 use
/// (sqrt(p_t/p_s) c_s - sqrt(p_s/p_t) c_t)^2; pairs with t = n-1 use
/// [c_s (sqrt(p_s/p_n) + sqrt(p_n/p_s)) + sqrt(p_s/p_n) sum_{u != s} c_u]^2.
double square_term(const Distribution& p, std::span<const double> coeffs, std::size_t s,
                   std::size_t t);

struct AppendixReport {
  double q_f = 0.0;  ///< -c'H_f c
  double q_g = 0.0;  ///< -c'H_g c
  /// |Q_g - Q_f - sum_{s<t} Q_{s,t} W_{s,t}| / max(1, |Q_g|), with
  /// W_{s,t} = sum_j a_sj a_tj / (sum_i p_i a_ij).
  double identity_residual = 0.0;
  /// min over pairs of Q_{s,t}; non-negative up to rounding.
  double min_square_term = 0.0;
  /// |Q_g - sum_{s<t} Q_{s,t}| / max(1, |Q_g|): the same identity for a
  /// channel with all rows equal, where Q_f = 0 and every W_{s,t} = 1.
  double equal_rows_residual = 0.0;
};

/// Evaluates both quadratic-form identities at (A, p, c). `coeffs` has
/// length n-1. Throws std::invalid_argument on dimension mismatch or
/// boundary p.
AppendixReport appendix_identity_check(const Channel& c, const Distribution& p,
                                       std::span<const double> coeffs);

}  // namespace sdpi

#endif  // SDPI_QUADRATIC_FORMS_H
