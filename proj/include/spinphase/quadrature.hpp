// Copyright 2026 The spinphase Authors
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

#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace spinphase {

/// One-dimensional Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Nodes and weights via Newton iteration on the Legendre polynomial;
/// accurate to machine precision for the orders used here (<= a few hundred).
inline GaussLegendreRule gauss_legendre(std::size_t order) {
  if (order == 0) throw std::invalid_argument("gauss_legendre: order must be >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(order);
  rule.weights.resize(order);
  const std::size_t m = (order + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    // Chebyshev-based initial guess for the i-th positive root.
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(order) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      // Evaluate P_n(x) and P'_n(x) by the three-term recurrence.
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= order; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = order * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[order - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[order - 1 - i] = w;
  }
  return rule;
}

/// Tensor quadrature on S^2: Gauss-Legendre in u = cos(theta) crossed with a
/// uniform (trapezoidal, exact for trigonometric polynomials) grid in phi.
/// Weights include the full measure sin(theta) dtheta dphi, so
/// sum_k w_k f(theta_k, phi_k) ~ integral of f over the sphere (total 4*pi).
struct SphereQuadrature {
  std::vector<double> theta;
  std::vector<double> phi;
  std::vector<double> weight;

  std::size_t size() const { return theta.size(); }
};

inline SphereQuadrature sphere_quadrature(std::size_t order_theta, std::size_t order_phi) {
  const auto gl = gauss_legendre(order_theta);
  SphereQuadrature q;
  q.theta.reserve(order_theta * order_phi);
  q.phi.reserve(order_theta * order_phi);
  q.weight.reserve(order_theta * order_phi);
  const double dphi = 2.0 * std::numbers::pi / static_cast<double>(order_phi);
  for (std::size_t i = 0; i < order_theta; ++i) {
    const double th = std::acos(gl.nodes[i]);
    for (std::size_t j = 0; j < order_phi; ++j) {
      q.theta.push_back(th);
      q.phi.push_back(dphi * static_cast<double>(j));
      q.weight.push_back(gl.weights[i] * dphi);
    }
  }
  return q;
}

}  // namespace spinphase
