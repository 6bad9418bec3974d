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
#include <stdexcept>
#include <vector>

#include "spinphase/brackets.hpp"
#include "spinphase/sw.hpp"

namespace spinphase {

/// Cell-centered latitude-longitude grid on a single sphere. Rows are theta
/// (offset from the poles to avoid the coordinate singularities of the J/K
/// differential forms), columns are phi with periodic wrap.
template <typename Scalar>
struct BasicGrid {
  std::size_t n_theta = 0;
  std::size_t n_phi = 0;
  std::vector<Scalar> values;  // row-major, values[i * n_phi + j]

  BasicGrid() = default;
  BasicGrid(std::size_t nt, std::size_t np) : n_theta(nt), n_phi(np), values(nt * np, Scalar{}) {
    if (nt < 8 || np < 8) throw std::invalid_argument("grid: need at least 8 points per axis");
  }

  double theta(std::size_t i) const {
    return (static_cast<double>(i) + 0.5) * kPi / static_cast<double>(n_theta);
  }
  double phi(std::size_t j) const {
    return (static_cast<double>(j) + 0.5) * 2.0 * kPi / static_cast<double>(n_phi);
  }
  double dtheta() const { return kPi / static_cast<double>(n_theta); }
  double dphi() const { return 2.0 * kPi / static_cast<double>(n_phi); }

  Scalar& at(std::size_t i, std::size_t j) { return values[i * n_phi + j]; }
  Scalar at(std::size_t i, std::size_t j) const { return values[i * n_phi + j]; }
};

using GridFunction = BasicGrid<double>;
using ComplexGrid = BasicGrid<complex>;

/// Sample a single-qubit phase-space function onto a grid.
inline GridFunction grid_from_function(const PhaseSpaceFunction& f, std::size_t n_theta,
                                       std::size_t n_phi) {
  if (f.n_qubits() != 1) throw std::invalid_argument("grid_from_function: single qubit only");
  GridFunction g(n_theta, n_phi);
  for (std::size_t i = 0; i < n_theta; ++i)
    for (std::size_t j = 0; j < n_phi; ++j)
      g.at(i, j) = evaluate(f, {SpherePoint{g.theta(i), g.phi(j)}});
  return g;
}

/// Cell-quadrature integral over the sphere (measure sin(theta) dtheta dphi).
template <typename Scalar>
inline Scalar grid_integral(const BasicGrid<Scalar>& g) {
  Scalar acc{};
  for (std::size_t i = 0; i < g.n_theta; ++i) {
    const double w = std::sin(g.theta(i)) * g.dtheta() * g.dphi();
    for (std::size_t j = 0; j < g.n_phi; ++j) acc += g.at(i, j) * w;
  }
  return acc;
}

/// Project a grid back onto the l <= 1 coefficient basis at the given s:
/// c_I = integral Q, c_mu = (3/lambda) integral Q n_mu.
inline PhaseSpaceFunction grid_to_coeffs(const GridFunction& g, double s) {
  const double lam = lambda_s(s);
  double ci = 0.0, cx = 0.0, cy = 0.0, cz = 0.0;
  for (std::size_t i = 0; i < g.n_theta; ++i) {
    const double th = g.theta(i);
    const double w = std::sin(th) * g.dtheta() * g.dphi();
    for (std::size_t j = 0; j < g.n_phi; ++j) {
      const SpherePoint pt{th, g.phi(j)};
      const double v = g.at(i, j) * w;
      ci += v;
      cx += v * pt.nx();
      cy += v * pt.ny();
      cz += v * pt.nz();
    }
  }
  PauliPolynomial c(1);
  c.add(PauliString("I"), ci);
  c.add(PauliString("X"), 3.0 * cx / lam);
  c.add(PauliString("Y"), 3.0 * cy / lam);
  c.add(PauliString("Z"), 3.0 * cz / lam);
  return PhaseSpaceFunction{c, s, false};
}

namespace detail {

/// Centered second-order derivatives; theta uses one-sided stencils at the
/// first and last rows, phi wraps periodically.
template <typename Scalar>
inline Scalar d_theta(const BasicGrid<Scalar>& g, std::size_t i, std::size_t j) {
  const double h = g.dtheta();
  if (i == 0) return (-1.5 * g.at(0, j) + 2.0 * g.at(1, j) - 0.5 * g.at(2, j)) / h;
  if (i == g.n_theta - 1)
    return (1.5 * g.at(i, j) - 2.0 * g.at(i - 1, j) + 0.5 * g.at(i - 2, j)) / h;
  return (g.at(i + 1, j) - g.at(i - 1, j)) / (2.0 * h);
}

template <typename Scalar>
inline Scalar d_phi(const BasicGrid<Scalar>& g, std::size_t i, std::size_t j) {
  const std::size_t jp = (j + 1) % g.n_phi;
  const std::size_t jm = (j + g.n_phi - 1) % g.n_phi;
  return (g.at(i, jp) - g.at(i, jm)) / (2.0 * g.dphi());
}

}  // namespace detail

/// Finite-difference application of a single J/K coordinate operator:
///   J_x =  sin(phi) d_theta + cot(theta) cos(phi) d_phi
///   J_y = -cos(phi) d_theta + cot(theta) sin(phi) d_phi
///   J_z = -d_phi
///   K_x = sin(theta)cos(phi) + cos(theta)cos(phi) d_theta - (sin(phi)/sin(theta)) d_phi
///   K_y = sin(theta)sin(phi) + cos(theta)sin(phi) d_theta + (cos(phi)/sin(theta)) d_phi
///   K_z = cos(theta) - sin(theta) d_theta
/// J_I is the zero map and K_I the identity.
template <typename Scalar>
inline BasicGrid<Scalar> grid_coord_operator_1q_t(const CoordOperator& op,
                                                  const BasicGrid<Scalar>& g) {
  BasicGrid<Scalar> out(g.n_theta, g.n_phi);
  for (std::size_t i = 0; i < g.n_theta; ++i) {
    const double th = g.theta(i);
    const double st = std::sin(th), ct = std::cos(th);
    for (std::size_t j = 0; j < g.n_phi; ++j) {
      const double ph = g.phi(j);
      const double sp = std::sin(ph), cp = std::cos(ph);
      const Scalar v = g.at(i, j);
      Scalar dth{}, dph{};
      if (!(op.kind == CoordKind::J && op.pauli == PauliOp::I) &&
          !(op.kind == CoordKind::K && op.pauli == PauliOp::I)) {
        dth = detail::d_theta(g, i, j);
        dph = detail::d_phi(g, i, j);
      }
      Scalar r{};
      if (op.kind == CoordKind::J) {
        switch (op.pauli) {
          case PauliOp::I: r = Scalar{}; break;
          case PauliOp::X: r = sp * dth + (ct / st) * cp * dph; break;
          case PauliOp::Y: r = -cp * dth + (ct / st) * sp * dph; break;
          case PauliOp::Z: r = -dph; break;
        }
      } else {
        switch (op.pauli) {
          case PauliOp::I: r = v; break;
          case PauliOp::X: r = st * cp * v + ct * cp * dth - (sp / st) * dph; break;
          case PauliOp::Y: r = st * sp * v + ct * sp * dth + (cp / st) * dph; break;
          case PauliOp::Z: r = ct * v - st * dth; break;
        }
      }
      out.at(i, j) = r;
    }
  }
  return out;
}

inline GridFunction grid_coord_operator_1q(const CoordOperator& op, const GridFunction& g) {
  return grid_coord_operator_1q_t(op, g);
}

/// Model specification for the single-qubit PDE evolver.
struct GridModel {
  PauliPolynomial hamiltonian{1};             // operator coefficients, 1 qubit
  std::vector<PauliPolynomial> jumps;         // 1-qubit jump operators (may be complex)
  double gamma = 0.0;
  GeneratorKind kind = GeneratorKind::unitary;
};

namespace detail {

/// sine-bracket action of a (possibly complex) single-qubit operator
/// L = sum_mu l_mu sigma_mu on a grid: 2 * sum_mu l_mu J_mu (J_I = 0).
inline ComplexGrid sine_action(const PauliPolynomial& l, const ComplexGrid& g) {
  ComplexGrid out(g.n_theta, g.n_phi);
  for (const auto& [p, c] : l.terms()) {
    if (p.op(0) == PauliOp::I) continue;
    const ComplexGrid jg = grid_coord_operator_1q_t(CoordOperator{0, p.op(0), CoordKind::J}, g);
    for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] += 2.0 * c * jg.values[k];
  }
  return out;
}

/// cosine-bracket action: 2 * sum_mu l_mu K_mu (K_I = identity).
inline ComplexGrid cosine_action(const PauliPolynomial& l, const ComplexGrid& g) {
  ComplexGrid out(g.n_theta, g.n_phi);
  for (const auto& [p, c] : l.terms()) {
    const ComplexGrid kg = grid_coord_operator_1q_t(CoordOperator{0, p.op(0), CoordKind::K}, g);
    for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] += 2.0 * c * kg.values[k];
  }
  return out;
}

inline ComplexGrid grid_rhs(const GridModel& model, const ComplexGrid& g) {
  ComplexGrid rhs(g.n_theta, g.n_phi);
  switch (model.kind) {
    case GeneratorKind::unitary:
      rhs = sine_action(model.hamiltonian, g);
      break;
    case GeneratorKind::imaginary: {
      const ComplexGrid cg = cosine_action(model.hamiltonian, g);
      for (std::size_t k = 0; k < rhs.values.size(); ++k) rhs.values[k] = -cg.values[k];
      break;
    }
    case GeneratorKind::lindblad: {
      rhs = sine_action(model.hamiltonian, g);
      const complex i(0.0, 1.0);
      for (const auto& l : model.jumps) {
        const PauliPolynomial ld = l.adjoint();
        const ComplexGrid t1 = sine_action(l, sine_action(ld, g));
        const ComplexGrid t2 = sine_action(ld, sine_action(l, g));
        const ComplexGrid t3 = sine_action(l, cosine_action(ld, g));
        const ComplexGrid t4 = sine_action(ld, cosine_action(l, g));
        for (std::size_t k = 0; k < rhs.values.size(); ++k)
          rhs.values[k] += 0.25 * model.gamma *
                           (t1.values[k] + t2.values[k] + i * t3.values[k] - i * t4.values[k]);
      }
      break;
    }
  }
  return rhs;
}

}  // namespace detail

/// Explicit RK4 integration of the single-qubit PDE. If the solution norm
/// blows past 10x its initial value the run restarts with dt halved (up to 12
/// times) — a pragmatic stability guard for the stiff polar terms.
inline GridFunction grid_evolve_1q(const GridFunction& q0, const GridModel& model, double t_final,
                                   double dt) {
  if (dt <= 0.0) throw std::invalid_argument("grid_evolve_1q: dt must be positive");
  double max0 = 0.0;
  for (double v : q0.values) max0 = std::max(max0, std::abs(v));
  for (int attempt = 0; attempt < 13; ++attempt) {
    ComplexGrid g(q0.n_theta, q0.n_phi);
    for (std::size_t k = 0; k < g.values.size(); ++k) g.values[k] = q0.values[k];
    bool unstable = false;
    double t = 0.0;
    while (t < t_final - 1e-15 && !unstable) {
      const double h = std::min(dt, t_final - t);
      auto step = [&](const ComplexGrid& base, const ComplexGrid& k, double w) {
        ComplexGrid out = base;
        for (std::size_t idx = 0; idx < out.values.size(); ++idx)
          out.values[idx] += w * k.values[idx];
        return out;
      };
      const ComplexGrid k1 = detail::grid_rhs(model, g);
      const ComplexGrid k2 = detail::grid_rhs(model, step(g, k1, 0.5 * h));
      const ComplexGrid k3 = detail::grid_rhs(model, step(g, k2, 0.5 * h));
      const ComplexGrid k4 = detail::grid_rhs(model, step(g, k3, h));
      for (std::size_t idx = 0; idx < g.values.size(); ++idx)
        g.values[idx] += (h / 6.0) * (k1.values[idx] + 2.0 * k2.values[idx] +
                                      2.0 * k3.values[idx] + k4.values[idx]);
      t += h;
      if (model.kind == GeneratorKind::imaginary) {
        const complex total = grid_integral(g);
        if (std::abs(total) < 1e-300) throw std::runtime_error("grid_evolve_1q: trace collapsed");
        for (auto& v : g.values) v /= total;
      }
      for (const auto& v : g.values)
        if (!(std::abs(v) < 10.0 * max0 + 10.0)) {
          unstable = true;
          break;
        }
    }
    if (!unstable) {
      GridFunction out(q0.n_theta, q0.n_phi);
      for (std::size_t k = 0; k < out.values.size(); ++k) out.values[k] = g.values[k].real();
      return out;
    }
    dt *= 0.5;
  }
  throw std::runtime_error("grid_evolve_1q: unstable after repeated dt halving");
}

}  // namespace spinphase
