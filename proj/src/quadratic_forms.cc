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

#include "sdpi/quadratic_forms.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace sdpi {

namespace {

void require_interior(const Distribution& p) {
  if (p.size() < 2) {
    throw std::invalid_argument("Hessians need at least two symbols");
  }
  if (p.min_entry() < kInteriorThreshold) {
    throw std::invalid_argument("p is on the simplex boundary (min entry " +
                                std::to_string(p.min_entry()) + ")");
  }
}

}  // namespace

Eigen::MatrixXd hessian_g(const Distribution& p) {
  require_interior(p);
  const Eigen::Index k = static_cast<Eigen::Index>(p.size()) - 1;
  const double last = p[p.size() - 1];
  Eigen::MatrixXd h = Eigen::MatrixXd::Constant(k, k, -1.0 / last);
  for (Eigen::Index i = 0; i < k; ++i) {
    h(i, i) = -(p[i] + last) / (p[i] * last);
  }
  return h;
}

Eigen::MatrixXd hessian_f(const Channel& c, const Distribution& p) {
  require_interior(p);
  if (c.n_inputs() != p.size()) {
    throw std::invalid_argument("hessian_f: channel has " + std::to_string(c.n_inputs()) +
                                " inputs, p has " + std::to_string(p.size()) + " entries");
  }
  const std::size_t n = p.size();
  const std::size_t last = n - 1;
  const Eigen::Index k = static_cast<Eigen::Index>(last);
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(k, k);
  // Column-wise accumulation; the marginal is computed directly so that an
  // exact zero stays exact.
  for (std::size_t j = 0; j < c.m_outputs(); ++j) {
    double denom = 0.0;
    bool any_nonzero = false;
    for (std::size_t i = 0; i < n; ++i) {
      denom += p[i] * c(i, j);
      any_nonzero = any_nonzero || c(i, j) != 0.0;
    }
    if (!any_nonzero) continue;
    Eigen::VectorXd diff(k);
    for (std::size_t i = 0; i < last; ++i) {
      diff(static_cast<Eigen::Index>(i)) = c(i, j) - c(last, j);
    }
    if (denom <= 0.0) {
      if (diff.squaredNorm() == 0.0) continue;
      throw std::invalid_argument("hessian_f: output column " + std::to_string(j) +
                                  " has zero probability but a nonzero contribution");
    }
    h.noalias() -= (diff * diff.transpose()) / denom;
  }
  return h;
}

double rayleigh_sup(const Channel& c, const Distribution& p) {
  const Eigen::MatrixXd neg_hf = -hessian_f(c, p);
  const Eigen::MatrixXd neg_hg = -hessian_g(p);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> spectrum(neg_hg, Eigen::EigenvaluesOnly);
  const double lo = spectrum.eigenvalues().minCoeff();
  const double hi = spectrum.eigenvalues().maxCoeff();
  if (!(lo > 0.0) || hi / lo > 1e12) {
    throw std::domain_error("rayleigh_sup: -H_g is ill-conditioned; p is too close to the boundary");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(neg_hg);
  if (llt.info() != Eigen::Success) {
    throw std::domain_error("rayleigh_sup: -H_g is not positive definite");
  }
  // M = L^{-1} (-H_f) L^{-T}
  const auto& l = llt.matrixL();
  Eigen::MatrixXd tmp = l.solve(neg_hf);
  Eigen::MatrixXd m = l.solve(tmp.transpose()).transpose();
  m = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m, Eigen::EigenvaluesOnly);
  return std::clamp(eig.eigenvalues().maxCoeff(), 0.0, 1.0);
}

double square_term(const Distribution& p, std::span<const double> coeffs, std::size_t s,
                   std::size_t t) {
  const std::size_t n = p.size();
  if (coeffs.size() + 1 != n) {
    throw std::invalid_argument("square_term: need " + std::to_string(n - 1) + " coefficients");
  }
  if (!(s < t && t < n)) {
    throw std::invalid_argument("square_term: need s < t < n");
  }
  if (t + 1 < n) {
    const double v = std::sqrt(p[t] / p[s]) * coeffs[s] - std::sqrt(p[s] / p[t]) * coeffs[t];
    return v * v;
  }
  const double last = p[n - 1];
  double others = 0.0;
  for (std::size_t u = 0; u < coeffs.size(); ++u) {
    if (u != s) others += coeffs[u];
  }
  const double v = coeffs[s] * (std::sqrt(p[s] / last) + std::sqrt(last / p[s])) +
                   std::sqrt(p[s] / last) * others;
  return v * v;
}

AppendixReport appendix_identity_check(const Channel& c, const Distribution& p,
                                       std::span<const double> coeffs) {
  require_interior(p);
  if (c.n_inputs() != p.size()) {
    throw std::invalid_argument("appendix_identity_check: channel has " +
                                std::to_string(c.n_inputs()) + " inputs, p has " +
                                std::to_string(p.size()) + " entries");
  }
  if (coeffs.size() + 1 != p.size()) {
    throw std::invalid_argument("appendix_identity_check: need " +
                                std::to_string(p.size() - 1) + " coefficients, got " +
                                std::to_string(coeffs.size()));
  }
  const Eigen::Map<const Eigen::VectorXd> v(coeffs.data(),
                                            static_cast<Eigen::Index>(coeffs.size()));
  AppendixReport r;
  r.q_f = -v.dot(hessian_f(c, p) * v);
  r.q_g = -v.dot(hessian_g(p) * v);

  std::vector<double> marginal(c.m_outputs(), 0.0);
  for (std::size_t j = 0; j < c.m_outputs(); ++j) {
    for (std::size_t i = 0; i < p.size(); ++i) marginal[j] += p[i] * c(i, j);
  }

  double weighted = 0.0;
  double plain = 0.0;
  r.min_square_term = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < p.size(); ++s) {
    for (std::size_t t = s + 1; t < p.size(); ++t) {
      const double q = square_term(p, coeffs, s, t);
      double w = 0.0;
      for (std::size_t j = 0; j < c.m_outputs(); ++j) {
        if (marginal[j] > 0.0) w += c(s, j) * c(t, j) / marginal[j];
      }
      weighted += q * w;
      plain += q;
      r.min_square_term = std::min(r.min_square_term, q);
    }
  }
  const double scale = std::max(1.0, std::abs(r.q_g));
  r.identity_residual = std::abs(r.q_g - r.q_f - weighted) / scale;
  r.equal_rows_residual = std::abs(r.q_g - plain) / scale;
  return r;
}

}  // namespace sdpi
