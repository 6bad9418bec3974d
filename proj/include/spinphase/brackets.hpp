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

#include <stdexcept>

#include "spinphase/pauli.hpp"
#include "spinphase/sw.hpp"

namespace spinphase {

/// Phase-space image of -i[A, B]. Acts on stored coefficients, so the result
/// is independent of the s-index.
inline PhaseSpaceFunction sine_bracket(const PhaseSpaceFunction& fa,
                                       const PhaseSpaceFunction& fb) {
  check_compatible(fa, fb);
  return PhaseSpaceFunction{commutator_poly(fa.coeffs, fb.coeffs), fa.s, false};
}

/// Phase-space image of {A, B}.
inline PhaseSpaceFunction cosine_bracket(const PhaseSpaceFunction& fa,
                                         const PhaseSpaceFunction& fb) {
  check_compatible(fa, fb);
  return PhaseSpaceFunction{anticommutator_poly(fa.coeffs, fb.coeffs), fa.s, false};
}

enum class CoordKind { J, K };

/// Sitewise coordinate operator: J (rotation/Killing action) or K (Jordan
/// action, Q-representation only). Represented through its exact action table
/// on the single-site basis symbols {1, n_x, n_y, n_z}.
struct CoordOperator {
  std::size_t site = 0;
  PauliOp pauli = PauliOp::I;
  CoordKind kind = CoordKind::J;
};

/// Exact table action on phase-space coefficients:
///   J_a: 1 -> 0, n_a -> 0, n_b -> eps_{abc} n_c;   J_I is the zero map.
///   K_a: 1 -> n_a, n_a -> 1, n_b -> 0 (b != a);    K_I is the identity.
/// K is defined only in the Q representation (s = -1).
inline PhaseSpaceFunction apply_coord_operator(const CoordOperator& op,
                                               const PhaseSpaceFunction& f) {
  if (op.site >= f.n_qubits())
    throw std::invalid_argument("apply_coord_operator: site out of range");
  if (op.kind == CoordKind::K && f.s != -1.0)
    throw std::invalid_argument(
        "apply_coord_operator: K operators close only in the Q representation (s = -1)");
  PauliPolynomial out(f.n_qubits());
  for (const auto& [p, c] : f.coeffs.terms()) {
    const PauliOp b = p.op(op.site);
    if (op.kind == CoordKind::J) {
      if (op.pauli == PauliOp::I || b == PauliOp::I || b == op.pauli) continue;
      const auto sp = mul_site(op.pauli, b);  // a*b = +/- i c
      const double sign = sp.phase_pow == 1 ? 1.0 : -1.0;
      out.add(p.with_op(op.site, sp.op), sign * c);
    } else {
      if (op.pauli == PauliOp::I) {
        out.add(p, c);
      } else if (b == PauliOp::I) {
        out.add(p.with_op(op.site, op.pauli), c);
      } else if (b == op.pauli) {
        out.add(p.with_op(op.site, PauliOp::I), c);
      }
      // b != a, both non-identity: annihilated.
    }
  }
  return PhaseSpaceFunction{out, f.s, false};
}

/// Residuals of the tensor-compatibility identities for A and B supported on
/// disjoint site sets and an arbitrary joint C:
///   [[f_{AB}, f_C]] = 1/2 ( {{f_A, [[f_B, f_C]]}} + {{f_B, [[f_A, f_C]]}} )
///   {{f_{AB}, f_C}} = 1/2 ( {{f_A, {{f_B, f_C}}}} - [[f_A, [[f_B, f_C]]]] )
/// Both vanish identically; returned values are max coefficient deviations.
struct TensorBracketResidual {
  double sine = 0.0;
  double cosine = 0.0;
};

inline TensorBracketResidual tensor_bracket_check(const PhaseSpaceFunction& fa,
                                                  const PhaseSpaceFunction& fb,
                                                  const PhaseSpaceFunction& fc) {
  check_compatible(fa, fb);
  check_compatible(fa, fc);
  // A and B must act on disjoint sites.
  for (const auto& [pa, ca] : fa.coeffs.terms())
    for (const auto& [pb, cb] : fb.coeffs.terms())
      for (std::size_t i = 0; i < pa.size(); ++i)
        if (pa.op(i) != PauliOp::I && pb.op(i) != PauliOp::I)
          throw std::invalid_argument("tensor_bracket_check: overlapping site supports");

  const PhaseSpaceFunction fab = star_product(fa, fb);  // disjoint supports: AB = A tensor B

  const auto sine_lhs = sine_bracket(fab, fc);
  auto sine_rhs = cosine_bracket(fa, sine_bracket(fb, fc)).coeffs +
                  cosine_bracket(fb, sine_bracket(fa, fc)).coeffs;
  sine_rhs *= 0.5;

  const auto cos_lhs = cosine_bracket(fab, fc);
  auto cos_rhs = cosine_bracket(fa, cosine_bracket(fb, fc)).coeffs -
                 sine_bracket(fa, sine_bracket(fb, fc)).coeffs;
  cos_rhs *= 0.5;

  return {max_coeff_deviation(sine_lhs.coeffs, sine_rhs),
          max_coeff_deviation(cos_lhs.coeffs, cos_rhs)};
}

}  // namespace spinphase
