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
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "spinphase/pauli.hpp"
#include "spinphase/rng.hpp"

namespace spinphase {

/// Dense Hilbert-space reference implementation, capped at 8 qubits. Used for
/// cross-validation only; nothing in the phase-space path depends on it.
namespace oracle {

inline constexpr std::size_t kMaxQubits = 8;

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

inline std::size_t check_n(std::size_t n) {
  if (n == 0 || n > kMaxQubits) throw std::invalid_argument("oracle: qubit count out of range");
  return std::size_t{1} << n;
}

/// Basis-state action of a Pauli string: P |j> = phase * |j ^ flip_mask>.
/// Site 1 is the leftmost character and the most significant bit.
struct StringAction {
  std::size_t flip_mask = 0;
  std::vector<complex> phase;  // phase[j] for each basis index j
};

inline StringAction string_action(const PauliString& p) {
  const std::size_t n = p.size();
  const std::size_t dim = check_n(n);
  StringAction act;
  act.phase.assign(dim, complex(1.0, 0.0));
  for (std::size_t site = 0; site < n; ++site) {
    const std::size_t bit = std::size_t{1} << (n - 1 - site);
    switch (p.op(site)) {
      case PauliOp::I: break;
      case PauliOp::X: act.flip_mask ^= bit; break;
      case PauliOp::Y:
        act.flip_mask ^= bit;
        for (std::size_t j = 0; j < dim; ++j)
          act.phase[j] *= (j & bit) ? complex(0.0, -1.0) : complex(0.0, 1.0);
        break;
      case PauliOp::Z:
        for (std::size_t j = 0; j < dim; ++j)
          if (j & bit) act.phase[j] = -act.phase[j];
        break;
    }
  }
  return act;
}

/// Dense matrix of a Pauli polynomial A = sum_P a_P P.
inline Matrix operator_matrix(const PauliPolynomial& a) {
  const std::size_t dim = check_n(a.n_qubits());
  Matrix m = Matrix::Zero(dim, dim);
  for (const auto& [p, c] : a.terms()) {
    const StringAction act = string_action(p);
    for (std::size_t j = 0; j < dim; ++j) m(j ^ act.flip_mask, j) += c * act.phase[j];
  }
  return m;
}

/// Density matrix from expectation coefficients: rho = (1/2^N) sum_P c_P P.
inline Matrix density_from_poly(const PauliPolynomial& c) {
  if (!c.is_hermitian(1e-9))
    throw std::invalid_argument("density_from_poly: coefficients must be real");
  const double dim = static_cast<double>(check_n(c.n_qubits()));
  return operator_matrix(c) / dim;
}

/// Expectation coefficients c_P = Tr[rho P] for every Pauli string.
/// Each trace costs O(2^N) thanks to the permutation structure of P.
inline PauliPolynomial poly_from_density(const Matrix& rho, std::size_t n_qubits,
                                         double tol = kPruneTol) {
  const std::size_t dim = check_n(n_qubits);
  if (rho.rows() != static_cast<Eigen::Index>(dim))
    throw std::invalid_argument("poly_from_density: dimension mismatch");
  PauliPolynomial out(n_qubits);
  const std::size_t total = std::size_t{1} << (2 * n_qubits);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<PauliOp> ops(n_qubits);
    std::size_t c4 = code;
    for (std::size_t i = 0; i < n_qubits; ++i, c4 >>= 2) ops[i] = static_cast<PauliOp>(c4 & 3);
    const PauliString p(std::move(ops));
    const StringAction act = string_action(p);
    complex tr = 0.0;
    for (std::size_t j = 0; j < dim; ++j) tr += rho(j, j ^ act.flip_mask) * act.phase[j];
    if (std::abs(tr) >= tol) out.add(p, tr);
  }
  return out;
}

inline double expectation(const Matrix& rho, const PauliPolynomial& a) {
  return (rho * operator_matrix(a)).trace().real();
}

inline double purity(const Matrix& rho) { return (rho * rho).trace().real(); }

inline int rank(const Matrix& rho, double tol = 1e-10) {
  if (tol <= 0.0) throw std::invalid_argument("rank: tol must be positive");
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  int r = 0;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
    if (es.eigenvalues()(k) > tol) ++r;
  return r;
}

/// Dimension of the null space of the linear map A -> A (rho - I) on the
/// operator space, computed over the Pauli basis. This is 2^N times the number
/// of unit eigenvalues of rho, which need not coincide with rank(rho).
inline int star_fixed_point_dim(const Matrix& rho, std::size_t n_qubits, double tol = 1e-10) {
  if (tol <= 0.0) throw std::invalid_argument("star_fixed_point_dim: tol must be positive");
  const std::size_t dim = check_n(n_qubits);
  const std::size_t nbasis = std::size_t{1} << (2 * n_qubits);
  const Matrix m = rho - Matrix::Identity(dim, dim);
  Eigen::MatrixXcd sys(nbasis, nbasis);
  // Column for basis string P holds the Pauli coefficients of P (rho - I).
  std::vector<PauliString> basis;
  basis.reserve(nbasis);
  for (std::size_t code = 0; code < nbasis; ++code) {
    std::vector<PauliOp> ops(n_qubits);
    std::size_t c4 = code;
    for (std::size_t i = 0; i < n_qubits; ++i, c4 >>= 2) ops[i] = static_cast<PauliOp>(c4 & 3);
    basis.emplace_back(std::move(ops));
  }
  for (std::size_t col = 0; col < nbasis; ++col) {
    const StringAction act = string_action(basis[col]);
    Matrix pm = Matrix::Zero(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) pm(j ^ act.flip_mask, j) = act.phase[j];
    const Matrix image = pm * m;
    const PauliPolynomial coeffs = poly_from_density(image, n_qubits, 0.0);
    for (std::size_t row = 0; row < nbasis; ++row) sys(row, col) = coeffs.coeff(basis[row]);
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(sys);
  int nullity = 0;
  for (Eigen::Index k = 0; k < svd.singularValues().size(); ++k)
    if (svd.singularValues()(k) < tol * static_cast<double>(dim)) ++nullity;
  return nullity;
}

enum class EvolveKind { unitary, imaginary, lindblad };

struct MasterEquation {
  Matrix hamiltonian;
  std::vector<Matrix> jumps;
  double gamma = 0.0;
  EvolveKind kind = EvolveKind::unitary;

  Matrix derivative(const Matrix& rho) const {
    const complex i(0.0, 1.0);
    switch (kind) {
      case EvolveKind::unitary:
        return -i * (hamiltonian * rho - rho * hamiltonian);
      case EvolveKind::imaginary:
        return -(hamiltonian * rho + rho * hamiltonian);
      case EvolveKind::lindblad: {
        Matrix d = -i * (hamiltonian * rho - rho * hamiltonian);
        for (const Matrix& l : jumps) {
          const Matrix ldag = l.adjoint();
          const Matrix ll = ldag * l;
          d += gamma * (l * rho * ldag - 0.5 * (ll * rho + rho * ll));
        }
        return d;
      }
    }
    return Matrix::Zero(rho.rows(), rho.cols());  // unreachable
  }
};

/// Classic fourth-order Runge-Kutta on the master equation. Imaginary-time
/// flows are renormalized to unit trace after every step, matching the
/// phase-space integrator.
inline Matrix evolve(Matrix rho, const MasterEquation& eq, double t_final, double dt) {
  if (dt <= 0.0) throw std::invalid_argument("oracle::evolve: dt must be positive");
  double t = 0.0;
  while (t < t_final - 1e-15) {
    const double h = std::min(dt, t_final - t);
    const Matrix k1 = eq.derivative(rho);
    const Matrix k2 = eq.derivative(rho + 0.5 * h * k1);
    const Matrix k3 = eq.derivative(rho + 0.5 * h * k2);
    const Matrix k4 = eq.derivative(rho + h * k3);
    rho += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    if (eq.kind == EvolveKind::imaginary) rho /= rho.trace().real();
    t += h;
  }
  return rho;
}

/// Partial trace keeping the listed sites (0-based, strictly increasing).
inline Matrix partial_trace(const Matrix& rho, std::size_t n_qubits,
                            const std::vector<std::size_t>& keep) {
  check_n(n_qubits);
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set must be nonempty");
  for (std::size_t site : keep)
    if (site >= n_qubits) throw std::invalid_argument("partial_trace: site out of range");
  std::vector<std::size_t> traced;
  for (std::size_t i = 0; i < n_qubits; ++i)
    if (std::find(keep.begin(), keep.end(), i) == keep.end()) traced.push_back(i);
  const std::size_t dk = std::size_t{1} << keep.size();
  const std::size_t dt_dim = std::size_t{1} << traced.size();
  // Map (kept index, traced index) to a full basis index; site 0 is the MSB.
  auto assemble = [&](std::size_t kidx, std::size_t tidx) {
    std::size_t full = 0;
    for (std::size_t a = 0; a < keep.size(); ++a)
      if (kidx & (std::size_t{1} << (keep.size() - 1 - a)))
        full |= std::size_t{1} << (n_qubits - 1 - keep[a]);
    for (std::size_t a = 0; a < traced.size(); ++a)
      if (tidx & (std::size_t{1} << (traced.size() - 1 - a)))
        full |= std::size_t{1} << (n_qubits - 1 - traced[a]);
    return full;
  };
  Matrix out = Matrix::Zero(dk, dk);
  for (std::size_t r = 0; r < dk; ++r)
    for (std::size_t c = 0; c < dk; ++c)
      for (std::size_t tt = 0; tt < dt_dim; ++tt)
        out(r, c) += rho(assemble(r, tt), assemble(c, tt));
  return out;
}

/// Eigendecomposition purification: |psi> = sum_k sqrt(p_k) |v_k> |k>, ancilla
/// dimension = rank padded to a power of 2 (at least 2). Returns the state
/// vector together with the ancilla qubit count.
struct Purification {
  Vector psi;
  std::size_t n_ancilla;
};

inline Purification purify(const Matrix& rho, std::size_t n_qubits, double tol = 1e-12) {
  const std::size_t dim = check_n(n_qubits);
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  std::vector<std::size_t> kept;
  for (Eigen::Index k = 0; k < es.eigenvalues().size(); ++k)
    if (es.eigenvalues()(k) > tol) kept.push_back(static_cast<std::size_t>(k));
  std::size_t n_anc = 0;
  while ((std::size_t{1} << n_anc) < std::max<std::size_t>(kept.size(), 2)) ++n_anc;
  if (n_anc == 0) n_anc = 1;
  const std::size_t da = std::size_t{1} << n_anc;
  Vector psi = Vector::Zero(dim * da);
  for (std::size_t a = 0; a < kept.size(); ++a) {
    const double p = es.eigenvalues()(static_cast<Eigen::Index>(kept[a]));
    const Vector v = es.eigenvectors().col(static_cast<Eigen::Index>(kept[a]));
    for (std::size_t j = 0; j < dim; ++j) psi(j * da + a) += std::sqrt(p) * v(j);
  }
  psi /= psi.norm();
  return {psi, n_anc};
}

inline Matrix density_of_vector(const Vector& psi) { return psi * psi.adjoint(); }

/// Born-rule computational-basis sample.
inline std::size_t born_sample(const Matrix& rho, CounterRng& rng) {
  const double u = rng.next_double();
  double acc = 0.0;
  for (Eigen::Index j = 0; j < rho.rows(); ++j) {
    acc += rho(j, j).real();
    if (u < acc) return static_cast<std::size_t>(j);
  }
  return static_cast<std::size_t>(rho.rows() - 1);
}

/// Random full-rank density matrix from a Ginibre draw (for tests).
inline Matrix random_density(std::size_t n_qubits, CounterRng& rng) {
  const std::size_t dim = check_n(n_qubits);
  Matrix g(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      // Box-Muller normals for a rotation-invariant ensemble.
      const double u1 = std::max(rng.next_double(), 1e-16);
      const double u2 = rng.next_double();
      const double mag = std::sqrt(-2.0 * std::log(u1));
      const double ang = 2.0 * std::numbers::pi * u2;
      g(r, c) = complex(mag * std::cos(ang), mag * std::sin(ang));
    }
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return rho;
}

/// Random Hermitian Pauli polynomial with the given support size (for tests).
inline PauliPolynomial random_hermitian_poly(std::size_t n_qubits, std::size_t n_terms,
                                             CounterRng& rng) {
  PauliPolynomial out(n_qubits);
  out.add(PauliString(n_qubits), 0.0);
  std::size_t added = 0;
  while (added < n_terms) {
    std::vector<PauliOp> ops(n_qubits);
    for (std::size_t i = 0; i < n_qubits; ++i)
      ops[i] = static_cast<PauliOp>(rng.next_u64() & 3);
    const PauliString p(std::move(ops));
    const double c = 2.0 * rng.next_double() - 1.0;
    if (std::abs(c) < 0.05) continue;
    out.add(p, c);
    ++added;
  }
  return out;
}

}  // namespace oracle
}  // namespace spinphase
