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

#include <Eigen/Dense>
#include <map>
#include <stdexcept>
#include <string>
#include <unsupported/Eigen/MatrixFunctions>
#include <vector>

#include "spinphase/pauli.hpp"
#include "spinphase/sw.hpp"

namespace spinphase {

enum class GeneratorKind { unitary, imaginary, lindblad };

inline std::string generator_kind_name(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::unitary: return "unitary";
    case GeneratorKind::imaginary: return "imaginary";
    case GeneratorKind::lindblad: return "lindblad";
  }
  return "?";
}

/// Sparse linear map on the Pauli-expectation coefficient space encoding a
/// bracket flow. The map is applied term-by-term through the exact bracket
/// algebra; a dense materialization over the reachable support is available
/// for the matrix-exponential reference path.
class GeneratorMatrix {
 public:
  GeneratorMatrix(std::size_t n_qubits, GeneratorKind kind, PauliPolynomial hamiltonian,
                  std::vector<PauliPolynomial> jumps = {}, double gamma = 0.0)
      : n_qubits_(n_qubits),
        kind_(kind),
        hamiltonian_(std::move(hamiltonian)),
        jumps_(std::move(jumps)),
        gamma_(gamma) {
    if (hamiltonian_.n_qubits() != n_qubits_)
      throw std::invalid_argument("GeneratorMatrix: Hamiltonian dimension mismatch");
    for (const auto& j : jumps_)
      if (j.n_qubits() != n_qubits_)
        throw std::invalid_argument("GeneratorMatrix: jump dimension mismatch");
    if (gamma_ < 0.0) throw std::invalid_argument("GeneratorMatrix: gamma must be >= 0");
    if (!hamiltonian_.is_hermitian(1e-12))
      throw std::invalid_argument("GeneratorMatrix: Hamiltonian must be Hermitian");
  }

  std::size_t n_qubits() const { return n_qubits_; }
  GeneratorKind kind() const { return kind_; }
  const PauliPolynomial& hamiltonian() const { return hamiltonian_; }
  const std::vector<PauliPolynomial>& jumps() const { return jumps_; }
  double gamma() const { return gamma_; }

  /// Time derivative of an expectation-coefficient set: dc/dt = G c.
  PauliPolynomial apply(const PauliPolynomial& c) const {
    c.check_same_size(hamiltonian_);
    switch (kind_) {
      case GeneratorKind::unitary:
        return commutator_poly(hamiltonian_, c);
      case GeneratorKind::imaginary:
        return anticommutator_poly(hamiltonian_, c) * complex(-1.0);
      case GeneratorKind::lindblad: {
        PauliPolynomial d = commutator_poly(hamiltonian_, c);
        for (const auto& l : jumps_) d += gamma_ * dissipator(l, c);
        return d.real_part();
      }
    }
    return PauliPolynomial(n_qubits_);  // unreachable
  }

  /// Single dissipator assembled from nested sine/cosine brackets:
  ///   1/4 ( [[L,[[L+,c]]]] + [[L+,[[L,c]]]] + i[[L,{{L+,c}}]] - i[[L+,{{L,c}}]] )
  /// where [[.,.]] is the image of -i[.,.]; equals the coefficient image of
  ///   L c L+ - 1/2 {L+ L, c}.
  static PauliPolynomial dissipator(const PauliPolynomial& l, const PauliPolynomial& c) {
    const PauliPolynomial ld = l.adjoint();
    PauliPolynomial d = commutator_poly(l, commutator_poly(ld, c));
    d += commutator_poly(ld, commutator_poly(l, c));
    d += complex(0.0, 1.0) * commutator_poly(l, anticommutator_poly(ld, c));
    d -= complex(0.0, 1.0) * commutator_poly(ld, anticommutator_poly(l, c));
    d *= 0.25;
    return d;
  }

  /// Dense materialization over the closure of the seed support under the
  /// generator. Returns the ordered basis and the real matrix G with
  /// dc/dt = G c in that basis.
  struct Materialized {
    std::vector<PauliString> basis;
    Eigen::MatrixXd matrix;
    std::map<PauliString, std::size_t> index;
  };

  Materialized materialize(const PauliPolynomial& seed, std::size_t max_dim) const {
    Materialized m;
    std::vector<PauliString> frontier;
    auto insert = [&](const PauliString& p) {
      if (m.index.emplace(p, m.basis.size()).second) {
        m.basis.push_back(p);
        frontier.push_back(p);
      }
    };
    for (const auto& [p, c] : seed.terms()) insert(p);
    insert(PauliString(n_qubits_));
    std::map<PauliString, PauliPolynomial> columns;
    while (!frontier.empty()) {
      std::vector<PauliString> batch;
      batch.swap(frontier);
      for (const auto& p : batch) {
        PauliPolynomial unit(n_qubits_);
        unit.add(p, 1.0);
        const PauliPolynomial col = apply(unit);
        columns.emplace(p, col);
        for (const auto& [q, c] : col.terms()) insert(q);
        if (m.basis.size() > max_dim)
          throw std::runtime_error("GeneratorMatrix::materialize: reachable support exceeds cap");
      }
    }
    const auto dim = static_cast<Eigen::Index>(m.basis.size());
    m.matrix = Eigen::MatrixXd::Zero(dim, dim);
    for (const auto& [p, col] : columns) {
      const auto j = static_cast<Eigen::Index>(m.index.at(p));
      for (const auto& [q, c] : col.terms())
        m.matrix(static_cast<Eigen::Index>(m.index.at(q)), j) = c.real();
    }
    return m;
  }

 private:
  std::size_t n_qubits_;
  GeneratorKind kind_;
  PauliPolynomial hamiltonian_;
  std::vector<PauliPolynomial> jumps_;
  double gamma_;
};

inline GeneratorMatrix build_unitary_generator(const PauliPolynomial& h) {
  return GeneratorMatrix(h.n_qubits(), GeneratorKind::unitary, h);
}

inline GeneratorMatrix build_imaginary_generator(const PauliPolynomial& h) {
  return GeneratorMatrix(h.n_qubits(), GeneratorKind::imaginary, h);
}

inline GeneratorMatrix build_lindblad_generator(const PauliPolynomial& h,
                                                std::vector<PauliPolynomial> jumps,
                                                double gamma) {
  return GeneratorMatrix(h.n_qubits(), GeneratorKind::lindblad, h, std::move(jumps), gamma);
}

/// Transverse-field Ising chain with optional per-site depolarizing noise:
///   H = sum_i h_i X_i + sum_i J_i Z_i Z_{i+1},
/// jumps = {X_i, Y_i, Z_i} on every site when gamma > 0.
inline GeneratorMatrix build_tfim_generator(const std::vector<double>& h,
                                            const std::vector<double>& couplings, double gamma) {
  const std::size_t n = h.size();
  if (n == 0 || couplings.size() + 1 != n)
    throw std::invalid_argument("build_tfim_generator: need N fields and N-1 couplings");
  PauliPolynomial ham(n);
  ham.add(PauliString(n), 0.0);
  for (std::size_t i = 0; i < n; ++i)
    ham.add(PauliString(n).with_op(i, PauliOp::X), h[i]);
  for (std::size_t i = 0; i + 1 < n; ++i)
    ham.add(PauliString(n).with_op(i, PauliOp::Z).with_op(i + 1, PauliOp::Z), couplings[i]);
  std::vector<PauliPolynomial> jumps;
  if (gamma > 0.0) {
    for (std::size_t i = 0; i < n; ++i)
      for (PauliOp p : {PauliOp::X, PauliOp::Y, PauliOp::Z}) {
        PauliPolynomial j(n);
        j.add(PauliString(n).with_op(i, p), 1.0);
        jumps.push_back(j);
      }
  }
  return build_lindblad_generator(ham, std::move(jumps), gamma);
}

struct Trajectory {
  std::vector<double> times;
  std::vector<PhaseSpaceFunction> states;
};

enum class EvolveMethod { rk4, exact_small };

inline constexpr double kDefaultDt = 1e-3;
inline constexpr std::size_t kExactSmallCap = 4096;  // 4^6 coefficient dimensions

/// Integrate the coefficient flow. rk4 steps the sparse bracket map directly;
/// exact_small materializes the generator over the reachable support and uses
/// the dense matrix exponential. Imaginary-time flows renormalize the identity
/// coefficient to 1 after every accepted step.
inline Trajectory evolve(const PhaseSpaceFunction& f0, const GeneratorMatrix& g, double t_final,
                         double dt = kDefaultDt, EvolveMethod method = EvolveMethod::rk4,
                         std::size_t max_snapshots = 1024) {
  if (f0.n_qubits() != g.n_qubits())
    throw std::invalid_argument("evolve: state/generator dimension mismatch");
  if (dt <= 0.0) throw std::invalid_argument("evolve: dt must be positive");
  Trajectory traj;
  const double initial_scale = std::max(f0.coeffs.max_abs_coeff(), 1.0);
  const bool renorm = g.kind() == GeneratorKind::imaginary;

  if (method == EvolveMethod::exact_small) {
    const auto m = g.materialize(f0.coeffs, kExactSmallCap);
    const auto dim = static_cast<Eigen::Index>(m.basis.size());
    Eigen::VectorXd c0 = Eigen::VectorXd::Zero(dim);
    for (const auto& [p, c] : f0.coeffs.terms())
      c0(static_cast<Eigen::Index>(m.index.at(p))) = c.real();
    const std::size_t n_out = std::max<std::size_t>(
        2, std::min<std::size_t>(max_snapshots, 65));
    for (std::size_t k = 0; k < n_out; ++k) {
      const double t = t_final * static_cast<double>(k) / static_cast<double>(n_out - 1);
      const Eigen::MatrixXd propagator = (m.matrix * t).exp();
      Eigen::VectorXd ct = propagator * c0;
      PauliPolynomial coeffs(g.n_qubits());
      for (Eigen::Index i = 0; i < dim; ++i)
        if (std::abs(ct(i)) >= kPruneTol) coeffs.add(m.basis[i], ct(i));
      if (renorm) {
        const double cid = coeffs.coeff(PauliString(g.n_qubits())).real();
        if (std::abs(cid) < 1e-300) throw std::runtime_error("evolve: trace collapsed");
        coeffs *= 1.0 / cid;
      }
      traj.times.push_back(t);
      traj.states.push_back(PhaseSpaceFunction{coeffs, f0.s, f0.is_state});
    }
    return traj;
  }

  const auto n_steps = static_cast<std::size_t>(std::ceil(t_final / dt - 1e-12));
  const std::size_t stride = n_steps / max_snapshots + 1;
  PauliPolynomial c = f0.coeffs;
  traj.times.push_back(0.0);
  traj.states.push_back(f0);
  double t = 0.0;
  for (std::size_t step = 0; step < n_steps; ++step) {
    const double h = std::min(dt, t_final - t);
    const PauliPolynomial k1 = g.apply(c);
    const PauliPolynomial k2 = g.apply(c + (0.5 * h) * k1);
    const PauliPolynomial k3 = g.apply(c + (0.5 * h) * k2);
    const PauliPolynomial k4 = g.apply(c + h * k3);
    c += (h / 6.0) * (k1 + complex(2.0) * k2 + complex(2.0) * k3 + k4);
    t += h;
    if (renorm) {
      const double cid = c.coeff(PauliString(g.n_qubits())).real();
      if (std::abs(cid) < 1e-300) throw std::runtime_error("evolve: trace collapsed");
      c *= 1.0 / cid;
    }
    if (c.max_abs_coeff() > 1e6 * initial_scale)
      throw std::runtime_error("evolve: coefficient norm diverged; reduce dt");
    if ((step + 1) % stride == 0 || step + 1 == n_steps) {
      traj.times.push_back(t);
      traj.states.push_back(PhaseSpaceFunction{c, f0.s, f0.is_state});
    }
  }
  return traj;
}

/// Purity from the coefficient representation: (1/2^N) sum_P c_P^2.
inline double purity_coeffs(const PauliPolynomial& c) {
  double acc = 0.0;
  for (const auto& [p, v] : c.terms()) acc += std::norm(v);
  return acc / static_cast<double>(std::size_t{1} << c.n_qubits());
}

}  // namespace spinphase
