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
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spinphase/pauli.hpp"
#include "spinphase/rng.hpp"
#include "spinphase/sw.hpp"

namespace spinphase {

struct McConfig {
  std::size_t n_samples = 100000;
  std::uint64_t seed = 0;
  std::size_t n_workers = 1;
};

struct McResult {
  double estimate = 0.0;
  double stderr_ = 0.0;
};

/// Exact expectation from the coefficient contraction <A> = sum_P a_P c_P,
/// pairing the state's Pauli expectations with the observable's operator
/// coefficients.
inline double expectation_exact(const PhaseSpaceFunction& state, const PauliPolynomial& obs) {
  state.coeffs.check_same_size(obs);
  complex acc = 0.0;
  for (const auto& [p, a] : obs.terms()) acc += a * state.coeffs.coeff(p);
  return acc.real();
}

namespace detail {

/// Deterministic uniform point on (S^2)^N for global sample index `idx`:
/// the draw depends only on (seed, idx), never on the worker partition.
inline ManifoldPoint mc_point(std::uint64_t seed, std::size_t n, std::uint64_t idx) {
  CounterRng rng(seed);
  rng.seek(idx * 2 * n);
  ManifoldPoint pt(n);
  for (std::size_t i = 0; i < n; ++i) rng.next_sphere_point(pt[i].theta, pt[i].phi);
  return pt;
}

/// Mean and standard error of a per-sample integrand. Accumulation uses
/// fixed-size blocks reduced in index order, so the result is bit-identical
/// for any worker partition (workers only distribute whole blocks).
template <typename F>
inline McResult mc_mean(const McConfig& cfg, F&& integrand) {
  if (cfg.n_samples == 0) throw std::invalid_argument("mc: n_samples must be positive");
  constexpr std::size_t kBlock = 4096;
  double sum = 0.0, sumsq = 0.0;
  for (std::size_t lo = 0; lo < cfg.n_samples; lo += kBlock) {
    double psum = 0.0, psumsq = 0.0;
    const std::size_t hi = std::min(cfg.n_samples, lo + kBlock);
    for (std::size_t i = lo; i < hi; ++i) {
      const double v = integrand(i);
      psum += v;
      psumsq += v * v;
    }
    sum += psum;
    sumsq += psumsq;
  }
  const double m = static_cast<double>(cfg.n_samples);
  const double mean = sum / m;
  const double var = std::max(sumsq / m - mean * mean, 0.0);
  return {mean, std::sqrt(var / m)};
}

}  // namespace detail

/// Monte Carlo estimate of <A> through the dual-pair phase-space integral:
/// uniform sampling over (S^2)^N with per-sample weight
///   (4*pi)^(2N) * f_rho^(s)(Omega) * f_A^(-s)(Omega).
inline McResult expectation_mc(const PhaseSpaceFunction& state, const PauliPolynomial& obs,
                               const McConfig& cfg) {
  state.coeffs.check_same_size(obs);
  const std::size_t n = state.n_qubits();
  const PhaseSpaceFunction fobs = symbol_of(obs, -state.s);
  const double scale = std::pow(kFourPi, 2.0 * static_cast<double>(n));
  return detail::mc_mean(cfg, [&](std::size_t idx) {
    const ManifoldPoint pt = detail::mc_point(cfg.seed, n, idx);
    return scale * evaluate(state, pt) * evaluate(fobs, pt);
  });
}

/// Sequential conditional computational-basis sampler. The probability of a
/// bit prefix is the expectation of the projector string
/// prod_i (I + (-1)^{b_i} Z_i)/2, evaluated by exact contraction.
inline std::vector<int> sample_basis(const PhaseSpaceFunction& state, CounterRng& rng) {
  if (!state.is_state) throw std::invalid_argument("sample_basis: input must be a state");
  const std::size_t n = state.n_qubits();
  std::vector<int> bits;
  bits.reserve(n);
  // prefix_probability(bits) = (1/2^k) sum over Z-subsets of the prefix.
  auto prefix_probability = [&](const std::vector<int>& b) {
    const std::size_t k = b.size();
    double acc = 0.0;
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      PauliString p(n);
      double sign = 1.0;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (std::size_t{1} << i)) {
          p = p.with_op(i, PauliOp::Z);
          if (b[i] == 1) sign = -sign;
        }
      acc += sign * state.coeffs.coeff(p).real();
    }
    return acc / static_cast<double>(std::size_t{1} << k);
  };
  double p_prefix = 1.0;
  for (std::size_t i = 0; i < n; ++i) {
    bits.push_back(0);
    const double p0 = prefix_probability(bits);
    if (p_prefix < 1e-12) throw std::runtime_error("sample_basis: impossible prefix");
    const double cond0 = std::clamp(p0 / p_prefix, 0.0, 1.0);
    if (rng.next_double() < cond0) {
      p_prefix = p0;
    } else {
      bits.back() = 1;
      p_prefix = p_prefix - p0;
    }
  }
  return bits;
}

/// Evaluation point for the moment-generating function: 3 real components per
/// site, ordered (w_x, w_y, w_z) for site 1, then site 2, ...
using MgfPoint = std::vector<double>;

namespace detail {

/// Closed-form sphere integrals behind the MGF:
///   integral over S^2 of e^{w.n} dn           = 4*pi*sinh(r)/r
///   integral over S^2 of n_mu e^{w.n} dn      = 4*pi*(w_mu/r)(cosh(r)/r - sinh(r)/r^2)
/// with r = |w| and series fallbacks near r = 0.
inline double mgf_site_identity(double r) {
  if (r < 1e-4) return kFourPi * (1.0 + r * r / 6.0 + r * r * r * r / 120.0);
  return kFourPi * std::sinh(r) / r;
}

inline double mgf_site_axis(double w_mu, double r) {
  if (r < 1e-4) return kFourPi * w_mu * (1.0 / 3.0 + r * r / 30.0);
  return kFourPi * (w_mu / r) * (std::cosh(r) / r - std::sinh(r) / (r * r));
}

}  // namespace detail

/// Closed-form moment-generating function
///   chi(w) = integral f_rho^(s)(Omega) exp(w . n) dOmega
///          = sum_P c_P lambda(s)^w(P) / (4*pi)^N  prod_i I(P_i, w^(i)).
inline double mgf_eval(const PhaseSpaceFunction& state, const MgfPoint& omega) {
  const std::size_t n = state.n_qubits();
  if (omega.size() != 3 * n) throw std::invalid_argument("mgf_eval: omega must have 3N entries");
  for (double w : omega)
    if (!std::isfinite(w)) throw std::invalid_argument("mgf_eval: omega must be finite");
  const double lam = lambda_s(state.s);
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i)
    r[i] = std::sqrt(omega[3 * i] * omega[3 * i] + omega[3 * i + 1] * omega[3 * i + 1] +
                     omega[3 * i + 2] * omega[3 * i + 2]);
  double chi = 0.0;
  for (const auto& [p, c] : state.coeffs.terms()) {
    double term = c.real() * std::pow(lam, static_cast<double>(p.weight()));
    for (std::size_t i = 0; i < n; ++i) {
      switch (p.op(i)) {
        case PauliOp::I: term *= detail::mgf_site_identity(r[i]); break;
        case PauliOp::X: term *= detail::mgf_site_axis(omega[3 * i], r[i]); break;
        case PauliOp::Y: term *= detail::mgf_site_axis(omega[3 * i + 1], r[i]); break;
        case PauliOp::Z: term *= detail::mgf_site_axis(omega[3 * i + 2], r[i]); break;
      }
    }
    chi += term;
  }
  return chi / std::pow(kFourPi, static_cast<double>(n));
}

/// Pauli moment <P> extracted from the MGF by central finite differences in
/// the omega components named by the non-identity sites of the string, scaled
/// by (3/lambda(s))^weight. The prefactor generalizes the full-weight case to
/// strings with identity sites.
inline double mgf_moment(const PhaseSpaceFunction& state, const PauliString& string,
                         double h = 1e-3) {
  if (h <= 0.0) throw std::invalid_argument("mgf_moment: step must be positive");
  if (string.size() != state.n_qubits())
    throw std::invalid_argument("mgf_moment: string length mismatch");
  std::vector<std::size_t> comps;  // flat omega components to differentiate
  for (std::size_t i = 0; i < string.size(); ++i) {
    switch (string.op(i)) {
      case PauliOp::I: break;
      case PauliOp::X: comps.push_back(3 * i); break;
      case PauliOp::Y: comps.push_back(3 * i + 1); break;
      case PauliOp::Z: comps.push_back(3 * i + 2); break;
    }
  }
  const std::size_t w = comps.size();
  if (w == 0) return mgf_eval(state, MgfPoint(3 * state.n_qubits(), 0.0));
  // Mixed central difference: sum over the 2^w sign corners.
  double acc = 0.0;
  for (std::size_t corner = 0; corner < (std::size_t{1} << w); ++corner) {
    MgfPoint omega(3 * state.n_qubits(), 0.0);
    double sign = 1.0;
    for (std::size_t k = 0; k < w; ++k) {
      if (corner & (std::size_t{1} << k)) {
        omega[comps[k]] = h;
      } else {
        omega[comps[k]] = -h;
        sign = -sign;
      }
    }
    acc += sign * mgf_eval(state, omega);
  }
  const double deriv = acc / std::pow(2.0 * h, static_cast<double>(w));
  return deriv * std::pow(3.0 / lambda_s(state.s), static_cast<double>(w));
}

/// Residual of the representation rescaling relation
///   chi^(s')(w) = chi^(s)((lambda(s')/lambda(s)) w).
inline double mgf_rep_rescale_check(const PhaseSpaceFunction& state, double s_a, double s_b,
                                    const MgfPoint& omega) {
  const PhaseSpaceFunction fa = change_representation(state, s_a);
  const PhaseSpaceFunction fb = change_representation(state, s_b);
  const double ratio = lambda_s(s_b) / lambda_s(s_a);
  MgfPoint scaled(omega.size());
  for (std::size_t k = 0; k < omega.size(); ++k) scaled[k] = ratio * omega[k];
  return std::abs(mgf_eval(fb, omega) - mgf_eval(fa, scaled));
}

}  // namespace spinphase
