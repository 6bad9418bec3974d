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
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinphase/pauli.hpp"
#include "spinphase/quadrature.hpp"

namespace spinphase {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kFourPi = 4.0 * std::numbers::pi;

/// Per-site scaling of non-identity harmonic components as a function of the
/// ordering index s in [-1, 1]: lambda(-1)=1 (Q), lambda(0)=sqrt(3) (W),
/// lambda(1)=3 (P).
inline double lambda_s(double s) { return std::pow(3.0, 0.5 * (1.0 + s)); }

inline void check_s_index(double s) {
  if (!(s >= -1.0 && s <= 1.0)) throw std::invalid_argument("s-index must lie in [-1, 1]");
}

/// Point on a single Bloch sphere.
struct SpherePoint {
  double theta = 0.0;  // [0, pi]
  double phi = 0.0;    // [0, 2*pi)

  double nx() const { return std::sin(theta) * std::cos(phi); }
  double ny() const { return std::sin(theta) * std::sin(phi); }
  double nz() const { return std::cos(theta); }
};

/// Point on (S^2)^N, one sphere per qubit.
using ManifoldPoint = std::vector<SpherePoint>;

/// Component of the unit vector (or 1 for the identity) attached to a
/// single-site Pauli at a sphere point.
inline double harmonic(PauliOp p, const SpherePoint& pt) {
  switch (p) {
    case PauliOp::I: return 1.0;
    case PauliOp::X: return pt.nx();
    case PauliOp::Y: return pt.ny();
    case PauliOp::Z: return pt.nz();
  }
  return 0.0;  // unreachable
}

/// A phase-space function: representation-free Pauli coefficients plus the
/// s-index applied at evaluation time. States store Pauli expectations
/// (coefficient 1 on the all-identity string); observables store the operator
/// expansion coefficients.
struct PhaseSpaceFunction {
  PauliPolynomial coeffs;
  double s = -1.0;
  bool is_state = false;

  std::size_t n_qubits() const { return coeffs.n_qubits(); }
};

/// Wraps an operator's Pauli coefficients as a phase-space function at the
/// given s. The coefficients are stored as-is; see evaluate() for the scaling.
inline PhaseSpaceFunction symbol_of(const PauliPolynomial& a, double s) {
  check_s_index(s);
  return PhaseSpaceFunction{a, s, false};
}

/// Wraps an expectation-coefficient set as a state function, enforcing trace
/// normalization and the expectation bound |c_P| <= 1.
inline PhaseSpaceFunction make_state(const PauliPolynomial& c, double s) {
  check_s_index(s);
  if (!c.is_hermitian(1e-9))
    throw std::invalid_argument("make_state: coefficients must be real");
  const double c_id = c.coeff(PauliString(c.n_qubits())).real();
  if (std::abs(c_id - 1.0) > 1e-9)
    throw std::invalid_argument("make_state: identity coefficient must be 1");
  for (const auto& [p, v] : c.terms())
    if (std::abs(v) > 1.0 + 1e-9)
      throw std::invalid_argument("make_state: expectation coefficient exceeds 1 on " + p.str());
  return PhaseSpaceFunction{c.real_part(), s, true};
}

inline void check_compatible(const PhaseSpaceFunction& a, const PhaseSpaceFunction& b) {
  if (a.n_qubits() != b.n_qubits())
    throw std::invalid_argument("phase-space functions have different qubit counts");
  if (a.s != b.s) throw std::invalid_argument("phase-space functions have different s-indices");
}

/// Complex point evaluation:
///   (1/(4*pi)^N) * sum_P c_P lambda(s)^w(P) prod_i harmonic(P_i, Omega_i).
inline complex evaluate_complex(const PhaseSpaceFunction& f, const ManifoldPoint& omega) {
  if (omega.size() != f.n_qubits())
    throw std::invalid_argument("evaluate: point dimension mismatch");
  const double lam = lambda_s(f.s);
  complex acc = 0.0;
  for (const auto& [p, c] : f.coeffs.terms()) {
    double term = std::pow(lam, static_cast<double>(p.weight()));
    for (std::size_t i = 0; i < omega.size(); ++i) term *= harmonic(p.op(i), omega[i]);
    acc += c * term;
  }
  return acc / std::pow(kFourPi, static_cast<double>(f.n_qubits()));
}

/// Real point evaluation; requires real (Hermitian) coefficients.
inline double evaluate(const PhaseSpaceFunction& f, const ManifoldPoint& omega) {
  if (!f.coeffs.is_hermitian(1e-9))
    throw std::invalid_argument("evaluate: non-Hermitian coefficients; use evaluate_complex");
  return evaluate_complex(f, omega).real();
}

/// Exact representation change: storage is representation-free, so only the
/// s-index moves; evaluated harmonic components rescale by
/// (lambda(s')/lambda(s))^weight automatically.
inline PhaseSpaceFunction change_representation(const PhaseSpaceFunction& f, double s_new) {
  check_s_index(s_new);
  PhaseSpaceFunction out = f;
  out.s = s_new;
  return out;
}

/// Symbol of the operator product AB at the shared s-index. Generally
/// complex-coefficient even for Hermitian inputs.
inline PhaseSpaceFunction star_product(const PhaseSpaceFunction& fa, const PhaseSpaceFunction& fb) {
  check_compatible(fa, fb);
  return PhaseSpaceFunction{poly_product(fa.coeffs, fb.coeffs), fa.s, false};
}

// ---------------------------------------------------------------------------
// Dense kernel matrices (validation path).
// ---------------------------------------------------------------------------

/// Single-site SW kernel at a sphere point:
///   (1/2pi) * (lambda(s) |Omega><Omega| - (lambda(s)-1)/2 * I),
/// with |Omega><Omega| = (I + n.sigma)/2. Trace is 1/(2pi).
inline Eigen::Matrix2cd kernel_matrix_1q(double s, const SpherePoint& pt) {
  check_s_index(s);
  const double lam = lambda_s(s);
  const complex i(0.0, 1.0);
  Eigen::Matrix2cd proj;
  proj << 0.5 * (1.0 + pt.nz()), 0.5 * (pt.nx() - i * pt.ny()),
      0.5 * (pt.nx() + i * pt.ny()), 0.5 * (1.0 - pt.nz());
  Eigen::Matrix2cd delta =
      (lam * proj - 0.5 * (lam - 1.0) * Eigen::Matrix2cd::Identity()) / (2.0 * kPi);
  return delta;
}

/// Tensor-product kernel over all sites.
inline Eigen::MatrixXcd kernel_matrix(double s, const ManifoldPoint& omega) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Ones(1, 1);
  for (const auto& pt : omega) {
    const Eigen::Matrix2cd k = kernel_matrix_1q(s, pt);
    Eigen::MatrixXcd next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r)
      for (Eigen::Index c = 0; c < out.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = out(r, c) * k;
    out = next;
  }
  return out;
}

/// Single-qubit triple kernel:
///   4*pi * Tr[Delta^(-s)(O') Delta^(-s)(O'') Delta^(s)(O)].
/// With the normalization used throughout (per-site kernel trace 1/(2pi), and
/// the matching inverse-map constant 2*pi), the integral realization of the
/// star product reads
///   evaluate(fA * fB, O) = 2*pi * integral fA(O') fB(O'') K(O, O', O'').
inline complex triple_kernel(double s, const SpherePoint& o, const SpherePoint& o1,
                             const SpherePoint& o2) {
  const Eigen::Matrix2cd a = kernel_matrix_1q(-s, o1);
  const Eigen::Matrix2cd b = kernel_matrix_1q(-s, o2);
  const Eigen::Matrix2cd c = kernel_matrix_1q(s, o);
  return kFourPi * (a * b * c).trace();
}

// ---------------------------------------------------------------------------
// Named state library.
// ---------------------------------------------------------------------------

struct StateParams {
  double p = 1.0;      // classical mixture weight
  double beta = 1.0;   // inverse temperature
  std::size_t n = 1;   // qubit count where variable (mixed:max, ghz)
};

/// Exact expectation coefficients of named reference states. Supported names:
/// zero, one, plus, minus, plus_i, minus_i, mixed:max, classical, thermal_x,
/// thermal_zz, bell:phi+, bell:phi-, bell:psi+, bell:psi-, ghz, w.
inline PhaseSpaceFunction state_library(const std::string& name, double s,
                                        const StateParams& params = {}) {
  check_s_index(s);
  auto single = [&](PauliOp axis, double value) {
    PauliPolynomial c(1);
    c.add(PauliString(std::size_t{1}), 1.0);
    c.add(PauliString(std::size_t{1}).with_op(0, axis), value);
    return make_state(c, s);
  };
  auto bell = [&](double xx, double yy, double zz) {
    PauliPolynomial c(2);
    c.add(PauliString("II"), 1.0);
    c.add(PauliString("XX"), xx);
    c.add(PauliString("YY"), yy);
    c.add(PauliString("ZZ"), zz);
    return make_state(c, s);
  };

  if (name == "zero") return single(PauliOp::Z, 1.0);
  if (name == "one") return single(PauliOp::Z, -1.0);
  if (name == "plus") return single(PauliOp::X, 1.0);
  if (name == "minus") return single(PauliOp::X, -1.0);
  if (name == "plus_i") return single(PauliOp::Y, 1.0);
  if (name == "minus_i") return single(PauliOp::Y, -1.0);

  if (name == "mixed:max") {
    if (params.n < 1) throw std::invalid_argument("mixed:max: n must be >= 1");
    return make_state(PauliPolynomial::identity(params.n), s);
  }
  if (name == "classical") {
    if (params.p < 0.0 || params.p > 1.0)
      throw std::invalid_argument("classical: p must lie in [0, 1]");
    return single(PauliOp::Z, 2.0 * params.p - 1.0);
  }
  if (name == "thermal_x") {
    // rho = exp(-beta * sigma_x) / Z  =>  <X> = -tanh(beta)
    return single(PauliOp::X, -std::tanh(params.beta));
  }
  if (name == "thermal_zz") {
    // rho = exp(+beta * ZZ) / Z (ferromagnetic H = -ZZ)  =>  <ZZ> = tanh(beta)
    PauliPolynomial c(2);
    c.add(PauliString("II"), 1.0);
    c.add(PauliString("ZZ"), std::tanh(params.beta));
    return make_state(c, s);
  }
  if (name == "bell:phi+") return bell(1.0, -1.0, 1.0);
  if (name == "bell:phi-") return bell(-1.0, 1.0, 1.0);
  if (name == "bell:psi+") return bell(1.0, 1.0, -1.0);
  if (name == "bell:psi-") return bell(-1.0, -1.0, -1.0);

  if (name == "ghz") {
    const std::size_t n = params.n >= 2 ? params.n : 3;
    PauliPolynomial c(n);
    // Diagonal sector: every string over {I, Z} with an even number of Z's has
    // expectation 1. Off-diagonal sector: full-weight strings over {X, Y} with
    // an even number of Y's have expectation (-1)^(#Y/2).
    const std::size_t total = std::size_t{1} << (2 * n);  // enumerate {I,X,Y,Z}^n compactly
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<PauliOp> ops(n);
      std::size_t nz = 0, nx = 0, ny = 0, ni = 0;
      std::size_t c4 = code;
      for (std::size_t i = 0; i < n; ++i, c4 >>= 2) {
        ops[i] = static_cast<PauliOp>(c4 & 3);
        switch (ops[i]) {
          case PauliOp::I: ++ni; break;
          case PauliOp::X: ++nx; break;
          case PauliOp::Y: ++ny; break;
          case PauliOp::Z: ++nz; break;
        }
      }
      if (nx == 0 && ny == 0) {
        if (nz % 2 == 0) c.add(PauliString(ops), 1.0);
      } else if (ni == 0 && nz == 0 && ny % 2 == 0) {
        c.add(PauliString(ops), (ny / 2) % 2 == 0 ? 1.0 : -1.0);
      }
    }
    return make_state(c, s);
  }
  if (name == "w") {
    // |W> = (|001> + |010> + |100>)/sqrt(3)
    PauliPolynomial c(3);
    c.add(PauliString("III"), 1.0);
    c.add(PauliString("ZZZ"), -1.0);
    const char axes[2] = {'X', 'Y'};
    for (int site = 0; site < 3; ++site) {
      std::string z1(3, 'I'), z2(3, 'Z');
      z1[site] = 'Z';
      z2[site] = 'I';
      c.add(PauliString(z1), 1.0 / 3.0);   // <Z_i> = 1/3
      c.add(PauliString(z2), -1.0 / 3.0);  // <Z_j Z_k> = -1/3
      for (char ax : axes) {
        std::string pp(3, ax), pz(3, ax);
        pp[site] = 'I';
        pz[site] = 'Z';
        c.add(PauliString(pp), 2.0 / 3.0);  // <X_j X_k> = <Y_j Y_k> = 2/3
        c.add(PauliString(pz), 2.0 / 3.0);  // <Z_i X_j X_k> etc. = 2/3
      }
    }
    return make_state(c, s);
  }
  throw std::invalid_argument("state_library: unknown state name '" + name + "'");
}

// ---------------------------------------------------------------------------
// Kernel axiom diagnostics.
// ---------------------------------------------------------------------------

struct KernelAxiomReport {
  double hermiticity = 0.0;   // max |Delta - Delta^dag|
  double normalization = 0.0; // |quadrature of Delta - I|
  double covariance = 0.0;    // |U Delta(O) U^dag - Delta(R_U O)|
  double traciality = 0.0;    // dual-pair reproducing-property residual
};

/// SU(2) element for rotation by `angle` about the unit axis `a`.
inline Eigen::Matrix2cd su2_rotation(double ax, double ay, double az, double angle) {
  const complex i(0.0, 1.0);
  Eigen::Matrix2cd gen;
  gen << az, ax - i * ay, ax + i * ay, -az;
  return std::cos(0.5 * angle) * Eigen::Matrix2cd::Identity() - i * std::sin(0.5 * angle) * gen;
}

/// Rotate a unit vector by `angle` about axis `a` (Rodrigues formula), then
/// convert back to angles.
inline SpherePoint rotate_point(const SpherePoint& pt, double ax, double ay, double az,
                                double angle) {
  const double n[3] = {pt.nx(), pt.ny(), pt.nz()};
  const double c = std::cos(angle), sn = std::sin(angle);
  const double dot = ax * n[0] + ay * n[1] + az * n[2];
  const double cross[3] = {ay * n[2] - az * n[1], az * n[0] - ax * n[2], ax * n[1] - ay * n[0]};
  double r[3];
  for (int k = 0; k < 3; ++k)
    r[k] = n[k] * c + cross[k] * sn + (k == 0 ? ax : k == 1 ? ay : az) * dot * (1.0 - c);
  SpherePoint out;
  out.theta = std::acos(std::clamp(r[2], -1.0, 1.0));
  out.phi = std::atan2(r[1], r[0]);
  if (out.phi < 0.0) out.phi += 2.0 * kPi;
  return out;
}

/// Numerical residuals of the kernel axioms at a given s-index (single qubit).
inline KernelAxiomReport kernel_axiom_report(double s, std::size_t quadrature_order = 64) {
  KernelAxiomReport rep;
  const auto quad = sphere_quadrature(quadrature_order, quadrature_order);

  // Hermiticity and quadrature normalization (integral of Delta = identity).
  Eigen::Matrix2cd accum = Eigen::Matrix2cd::Zero();
  for (std::size_t k = 0; k < quad.size(); ++k) {
    const SpherePoint pt{quad.theta[k], quad.phi[k]};
    const Eigen::Matrix2cd d = kernel_matrix_1q(s, pt);
    rep.hermiticity = std::max(rep.hermiticity, (d - d.adjoint()).cwiseAbs().maxCoeff());
    accum += quad.weight[k] * d;
  }
  rep.normalization = (accum - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();

  // Covariance under a fixed set of deterministic rotations.
  const double axes[3][3] = {{1, 0, 0}, {0, 1, 0}, {0.6, 0.48, 0.64}};
  const double angles[3] = {0.7, 1.9, 2.4};
  const SpherePoint samples[3] = {{0.3, 0.4}, {1.2, 3.3}, {2.6, 5.1}};
  for (const auto& pt : samples) {
    for (int r = 0; r < 3; ++r) {
      const Eigen::Matrix2cd u = su2_rotation(axes[r][0], axes[r][1], axes[r][2], angles[r]);
      const Eigen::Matrix2cd lhs = u * kernel_matrix_1q(s, pt) * u.adjoint();
      const SpherePoint rpt = rotate_point(pt, axes[r][0], axes[r][1], axes[r][2], angles[r]);
      const Eigen::Matrix2cd rhs = kernel_matrix_1q(s, rpt);
      rep.covariance = std::max(rep.covariance, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }

  // Dual-pair traciality via the reproducing property: for each Pauli basis
  // operator A, 2*pi * integral Tr[Delta^(-s)(O') Delta^(s)(O)] F_A(O') dO'
  // must return F_A(O) with F_A = Tr[A Delta^(s)].
  const char* basis[4] = {"I", "X", "Y", "Z"};
  for (const char* bs : basis) {
    const PauliPolynomial a = PauliPolynomial::term(bs);
    const auto fa = symbol_of(a, s);
    for (const auto& pt : samples) {
      const Eigen::Matrix2cd dref = kernel_matrix_1q(s, pt);
      complex integral = 0.0;
      for (std::size_t k = 0; k < quad.size(); ++k) {
        const SpherePoint qp{quad.theta[k], quad.phi[k]};
        const complex kern = (kernel_matrix_1q(-s, qp) * dref).trace();
        integral += quad.weight[k] * kern * evaluate_complex(fa, {qp});
      }
      const complex expected = evaluate_complex(fa, {pt});
      rep.traciality = std::max(rep.traciality, std::abs(2.0 * kPi * integral - expected));
    }
  }
  return rep;
}

/// Tensor product of two phase-space functions (shared s): coefficients are
/// concatenated sitewise, matching product-state factorization.
inline PhaseSpaceFunction tensor(const PhaseSpaceFunction& a, const PhaseSpaceFunction& b) {
  if (a.s != b.s) throw std::invalid_argument("tensor: s-index mismatch");
  PauliPolynomial out(a.n_qubits() + b.n_qubits());
  for (const auto& [pa, ca] : a.coeffs.terms()) {
    for (const auto& [pb, cb] : b.coeffs.terms()) {
      std::vector<PauliOp> ops = pa.ops();
      ops.insert(ops.end(), pb.ops().begin(), pb.ops().end());
      out.add(PauliString(std::move(ops)), ca * cb);
    }
  }
  return PhaseSpaceFunction{out, a.s, a.is_state && b.is_state};
}

}  // namespace spinphase
