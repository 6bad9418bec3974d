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
#include <functional>
#include <stdexcept>
#include <vector>

#include "spinphase/brackets.hpp"
#include "spinphase/estimation.hpp"
#include "spinphase/oracle.hpp"
#include "spinphase/quadrature.hpp"
#include "spinphase/sw.hpp"

namespace spinphase {

/// Marginalize onto the kept sites (0-based): retain strings with identity on
/// every traced site and restrict them. Equals the symbol of the partial
/// trace, coefficient for coefficient.
inline PhaseSpaceFunction marginalize(const PhaseSpaceFunction& f,
                                      const std::vector<std::size_t>& keep) {
  if (keep.empty()) throw std::invalid_argument("marginalize: keep set must be nonempty");
  for (std::size_t s : keep)
    if (s >= f.n_qubits()) throw std::invalid_argument("marginalize: site out of range");
  PauliPolynomial out(keep.size());
  for (const auto& [p, c] : f.coeffs.terms()) {
    bool keep_term = true;
    for (std::size_t i = 0; i < p.size() && keep_term; ++i)
      if (p.op(i) != PauliOp::I && std::find(keep.begin(), keep.end(), i) == keep.end())
        keep_term = false;
    if (!keep_term) continue;
    std::vector<PauliOp> ops;
    ops.reserve(keep.size());
    for (std::size_t s : keep) ops.push_back(p.op(s));
    out.add(PauliString(std::move(ops)), c);
  }
  return PhaseSpaceFunction{out, f.s, f.is_state};
}

/// Purity from the coefficient representation: (1/2^N) sum_P c_P^2.
inline double purity_phase(const PhaseSpaceFunction& f) {
  double acc = 0.0;
  for (const auto& [p, c] : f.coeffs.terms()) acc += std::norm(c);
  return acc / static_cast<double>(std::size_t{1} << f.n_qubits());
}

/// Integral form of the purity (N <= 2): for a single qubit in the Q
/// representation, 6*pi * integral Q^2 - 1; in general,
/// (1/2^(N+1)) * integral of the evaluated cosine bracket {{f, f}}.
inline double purity_phase_integral(const PhaseSpaceFunction& f, std::size_t order = 64) {
  const std::size_t n = f.n_qubits();
  if (n > 2) throw std::invalid_argument("purity_phase_integral: quadrature limited to N <= 2");
  const PhaseSpaceFunction ff = cosine_bracket(f, f);
  const auto quad = sphere_quadrature(order, order);
  double acc = 0.0;
  if (n == 1) {
    for (std::size_t k = 0; k < quad.size(); ++k)
      acc += quad.weight[k] * evaluate(ff, {SpherePoint{quad.theta[k], quad.phi[k]}});
  } else {
    for (std::size_t a = 0; a < quad.size(); ++a)
      for (std::size_t b = 0; b < quad.size(); ++b)
        acc += quad.weight[a] * quad.weight[b] *
               evaluate(ff, {SpherePoint{quad.theta[a], quad.phi[a]},
                             SpherePoint{quad.theta[b], quad.phi[b]}});
  }
  return acc / static_cast<double>(std::size_t{1} << (n + 1));
}

/// Single-qubit printed form 6*pi integral Q^2 - 1 (Q representation).
inline double purity_q_integral_1q(const PhaseSpaceFunction& f, std::size_t order = 64) {
  if (f.n_qubits() != 1) throw std::invalid_argument("purity_q_integral_1q: single qubit only");
  if (f.s != -1.0) throw std::invalid_argument("purity_q_integral_1q: Q representation only");
  const auto quad = sphere_quadrature(order, order);
  double acc = 0.0;
  for (std::size_t k = 0; k < quad.size(); ++k) {
    const double q = evaluate(f, {SpherePoint{quad.theta[k], quad.phi[k]}});
    acc += quad.weight[k] * q * q;
  }
  return 6.0 * kPi * acc - 1.0;
}

/// Wehrl entropy -integral Q log Q. Monte Carlo by default; deterministic
/// quadrature for a single qubit. Requires the Q representation, whose values
/// are nonnegative for states.
inline McResult wehrl_entropy(const PhaseSpaceFunction& f, const McConfig& cfg) {
  if (f.s != -1.0)
    throw std::invalid_argument("wehrl_entropy: requires the Q representation (s = -1)");
  if (!f.is_state) throw std::invalid_argument("wehrl_entropy: input must be a state");
  const std::size_t n = f.n_qubits();
  auto integrand_value = [&](const ManifoldPoint& pt) {
    const double q = std::max(evaluate(f, pt), 1e-300);
    return -q * std::log(q);
  };
  if (n == 1) {
    const auto quad = sphere_quadrature(128, 128);
    double acc = 0.0;
    for (std::size_t k = 0; k < quad.size(); ++k)
      acc += quad.weight[k] * integrand_value({SpherePoint{quad.theta[k], quad.phi[k]}});
    return {acc, 0.0};
  }
  const double scale = std::pow(kFourPi, static_cast<double>(n));
  return detail::mc_mean(cfg, [&](std::size_t idx) {
    return scale * integrand_value(detail::mc_point(cfg.seed, n, idx));
  });
}

namespace detail {

/// Orthonormal real spherical harmonic Y_{l m} (m >= 0 cosine branch,
/// m < 0 sine branch). The Condon-Shortley sign convention is irrelevant for
/// projection magnitudes.
inline double real_sph_harm(unsigned l, int m, double theta, double phi) {
  const unsigned am = static_cast<unsigned>(m < 0 ? -m : m);
  double norm = (2.0 * l + 1.0) / kFourPi;
  for (unsigned k = l - am + 1; k <= l + am; ++k) norm /= static_cast<double>(k);
  const double p = std::assoc_legendre(l, am, std::cos(theta));
  if (m == 0) return std::sqrt(norm) * p;
  const double angular = m > 0 ? std::cos(am * phi) : std::sin(am * phi);
  return std::sqrt(2.0 * norm) * p * angular;
}

}  // namespace detail

/// Norm of the component of a function on (S^2)^N (N <= 2) outside the
/// physical subspace span{l in {0,1} per site}, via spherical-harmonic
/// projection up to lmax_check.
inline double physicality_residual(const std::function<double(const ManifoldPoint&)>& f,
                                   std::size_t n_qubits, unsigned lmax_check = 3,
                                   std::size_t order = 64) {
  if (n_qubits == 0 || n_qubits > 2)
    throw std::invalid_argument("physicality_residual: quadrature limited to N <= 2");
  if (order < 2 * static_cast<std::size_t>(lmax_check))
    throw std::invalid_argument("physicality_residual: quadrature order < 2*lmax_check");
  const auto quad = sphere_quadrature(order, order);
  struct Mode {
    unsigned l;
    int m;
  };
  std::vector<Mode> modes;
  for (unsigned l = 0; l <= lmax_check; ++l)
    for (int m = -static_cast<int>(l); m <= static_cast<int>(l); ++m)
      modes.push_back({l, m});
  double out_norm_sq = 0.0;
  if (n_qubits == 1) {
    for (const auto& mode : modes) {
      if (mode.l <= 1) continue;
      double proj = 0.0;
      for (std::size_t k = 0; k < quad.size(); ++k)
        proj += quad.weight[k] * f({SpherePoint{quad.theta[k], quad.phi[k]}}) *
                detail::real_sph_harm(mode.l, mode.m, quad.theta[k], quad.phi[k]);
      out_norm_sq += proj * proj;
    }
  } else {
    // Separable two-sphere projection: precompute weighted harmonic values per
    // sphere and the sampled function matrix, then contract.
    const auto q2 = sphere_quadrature(std::max<std::size_t>(2 * lmax_check + 2, 16),
                                      std::max<std::size_t>(2 * lmax_check + 2, 16));
    const auto npts = static_cast<Eigen::Index>(q2.size());
    const auto nmodes = static_cast<Eigen::Index>(modes.size());
    Eigen::MatrixXd wy(npts, nmodes);
    for (Eigen::Index k = 0; k < npts; ++k)
      for (Eigen::Index mi = 0; mi < nmodes; ++mi)
        wy(k, mi) = q2.weight[static_cast<std::size_t>(k)] *
                    detail::real_sph_harm(modes[static_cast<std::size_t>(mi)].l,
                                          modes[static_cast<std::size_t>(mi)].m,
                                          q2.theta[static_cast<std::size_t>(k)],
                                          q2.phi[static_cast<std::size_t>(k)]);
    Eigen::MatrixXd fv(npts, npts);
    for (Eigen::Index a = 0; a < npts; ++a)
      for (Eigen::Index b = 0; b < npts; ++b)
        fv(a, b) = f({SpherePoint{q2.theta[static_cast<std::size_t>(a)],
                                  q2.phi[static_cast<std::size_t>(a)]},
                      SpherePoint{q2.theta[static_cast<std::size_t>(b)],
                                  q2.phi[static_cast<std::size_t>(b)]}});
    const Eigen::MatrixXd proj = wy.transpose() * fv * wy;  // modes x modes
    for (Eigen::Index ma = 0; ma < nmodes; ++ma)
      for (Eigen::Index mb = 0; mb < nmodes; ++mb)
        if (modes[static_cast<std::size_t>(ma)].l > 1 || modes[static_cast<std::size_t>(mb)].l > 1)
          out_norm_sq += proj(ma, mb) * proj(ma, mb);
  }
  return std::sqrt(out_norm_sq);
}

inline double physicality_residual(const PhaseSpaceFunction& f, unsigned lmax_check = 3,
                                   std::size_t order = 64) {
  return physicality_residual(
      [&](const ManifoldPoint& pt) { return evaluate(f, pt); }, f.n_qubits(), lmax_check, order);
}

/// Rank-1 matricization test for product structure across a bipartition.
struct ProductTestResult {
  bool is_product = false;
  PauliPolynomial factor_a;
  PauliPolynomial factor_b;
};

inline ProductTestResult product_test(const PhaseSpaceFunction& f,
                                      const std::vector<std::size_t>& part_a, double tol = 1e-8) {
  const std::size_t n = f.n_qubits();
  std::vector<std::size_t> part_b;
  for (std::size_t i = 0; i < n; ++i)
    if (std::find(part_a.begin(), part_a.end(), i) == part_a.end()) part_b.push_back(i);
  if (part_a.empty() || part_b.empty())
    throw std::invalid_argument("product_test: bipartition must split the sites");
  for (std::size_t s : part_a)
    if (s >= n) throw std::invalid_argument("product_test: site out of range");

  const std::size_t da = std::size_t{1} << (2 * part_a.size());
  const std::size_t db = std::size_t{1} << (2 * part_b.size());
  auto side_index = [](const PauliString& p, const std::vector<std::size_t>& sites) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < sites.size(); ++k)
      idx |= static_cast<std::size_t>(p.op(sites[k])) << (2 * k);
    return idx;
  };
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(da, db);
  for (const auto& [p, c] : f.coeffs.terms())
    m(side_index(p, part_a), side_index(p, part_b)) = c.real();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  ProductTestResult res;
  const auto& sv = svd.singularValues();
  res.is_product = sv.size() < 2 || sv(1) <= tol * std::max(sv(0), 1.0);
  if (res.is_product) {
    // For a rank-1 coefficient set with c_{I,I} = 1, the factors are read off
    // as a_P = c_{P x I} and b_Q = c_{I x Q}.
    PauliPolynomial fa(part_a.size()), fb(part_b.size());
    for (const auto& [p, c] : f.coeffs.terms()) {
      bool ident_b = true, ident_a = true;
      for (std::size_t s : part_b)
        if (p.op(s) != PauliOp::I) ident_b = false;
      for (std::size_t s : part_a)
        if (p.op(s) != PauliOp::I) ident_a = false;
      std::vector<PauliOp> ops;
      if (ident_b) {
        for (std::size_t s : part_a) ops.push_back(p.op(s));
        fa.add(PauliString(ops), c);
      }
      if (ident_a) {
        ops.clear();
        for (std::size_t s : part_b) ops.push_back(p.op(s));
        fb.add(PauliString(ops), c);
      }
    }
    res.factor_a = fa;
    res.factor_b = fb;
  }
  return res;
}

/// Dilation consistency: purify through the oracle, take the symbol of the
/// pure state on the extended manifold, marginalize the ancilla spheres, and
/// compare to the symbol of the original state. Returns the max coefficient
/// deviation; independent of s because storage is representation-free.
inline double dilation_check(const PauliPolynomial& rho_coeffs, double s) {
  const std::size_t n = rho_coeffs.n_qubits();
  if (n > 3) throw std::invalid_argument("dilation_check: oracle purification capped at N <= 3");
  check_s_index(s);
  const oracle::Matrix rho = oracle::density_from_poly(rho_coeffs);
  const auto pur = oracle::purify(rho, n);
  const oracle::Matrix ext = oracle::density_of_vector(pur.psi);
  const PauliPolynomial ext_coeffs = oracle::poly_from_density(ext, n + pur.n_ancilla);
  std::vector<std::size_t> keep(n);
  for (std::size_t i = 0; i < n; ++i) keep[i] = i;
  const PhaseSpaceFunction marg =
      marginalize(PhaseSpaceFunction{ext_coeffs, s, true}, keep);
  return max_coeff_deviation(marg.coeffs, rho_coeffs);
}

}  // namespace spinphase
