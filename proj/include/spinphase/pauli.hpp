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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace spinphase {

using complex = std::complex<double>;

/// Coefficients with modulus below this are dropped after every algebraic
/// operation, keeping sparse supports free of numerical dust.
inline constexpr double kPruneTol = 1e-12;

/// Single-site Pauli operator. Values are fixed so that for distinct
/// non-identity a, b the product is the remaining axis: X*Y ~ Z etc.
enum class PauliOp : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline char pauli_char(PauliOp p) { return "IXYZ"[static_cast<int>(p)]; }

inline PauliOp pauli_from_char(char c) {
  switch (c) {
    case 'I': return PauliOp::I;
    case 'X': return PauliOp::X;
    case 'Y': return PauliOp::Y;
    case 'Z': return PauliOp::Z;
    default: throw std::invalid_argument(std::string("invalid Pauli character: ") + c);
  }
}

/// Product of two single-site Paulis: a*b = i^phase * op, phase in Z4.
/// Returned phase is the exponent k of i^k.
struct SitePauliProduct {
  PauliOp op;
  int phase_pow;  // 0..3, meaning i^phase_pow
};

inline SitePauliProduct mul_site(PauliOp a, PauliOp b) {
  if (a == PauliOp::I) return {b, 0};
  if (b == PauliOp::I) return {a, 0};
  if (a == b) return {PauliOp::I, 0};
  const int ia = static_cast<int>(a), ib = static_cast<int>(b);
  const auto c = static_cast<PauliOp>(6 - ia - ib);
  // cyclic (X,Y), (Y,Z), (Z,X) pick up +i, anticyclic -i
  const bool cyclic = (ib - ia + 3) % 3 == 1;
  return {c, cyclic ? 1 : 3};
}

/// Fixed-length word of single-site Paulis. Immutable after construction.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n) : ops_(n, PauliOp::I) {}
  explicit PauliString(std::vector<PauliOp> ops) : ops_(std::move(ops)) {}
  explicit PauliString(const std::string& s) {
    ops_.reserve(s.size());
    for (char c : s) ops_.push_back(pauli_from_char(c));
  }

  std::size_t size() const { return ops_.size(); }
  PauliOp op(std::size_t site) const { return ops_[site]; }
  const std::vector<PauliOp>& ops() const { return ops_; }

  /// Number of non-identity sites.
  std::size_t weight() const {
    return static_cast<std::size_t>(
        std::count_if(ops_.begin(), ops_.end(), [](PauliOp p) { return p != PauliOp::I; }));
  }

  bool is_identity() const { return weight() == 0; }

  PauliString with_op(std::size_t site, PauliOp p) const {
    std::vector<PauliOp> v = ops_;
    v[site] = p;
    return PauliString(std::move(v));
  }

  std::string str() const {
    std::string s;
    s.reserve(ops_.size());
    for (PauliOp p : ops_) s.push_back(pauli_char(p));
    return s;
  }

  friend bool operator==(const PauliString& a, const PauliString& b) { return a.ops_ == b.ops_; }
  friend bool operator<(const PauliString& a, const PauliString& b) { return a.ops_ < b.ops_; }

 private:
  std::vector<PauliOp> ops_;
};

struct StringProduct {
  PauliString string;
  int phase_pow;  // i^phase_pow, phase_pow in 0..3
};

/// Operator product a*b = i^k * c with the phase tracked exactly in Z4.
inline StringProduct mul_strings(const PauliString& a, const PauliString& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("mul_strings: length mismatch");
  std::vector<PauliOp> out(a.size());
  int phase = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const auto sp = mul_site(a.op(i), b.op(i));
    out[i] = sp.op;
    phase = (phase + sp.phase_pow) % 4;
  }
  return {PauliString(std::move(out)), phase};
}

inline complex phase_value(int phase_pow) {
  switch (phase_pow & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

/// Do two strings commute as operators?
inline bool strings_commute(const PauliString& a, const PauliString& b) {
  const int fwd = mul_strings(a, b).phase_pow;
  const int bwd = mul_strings(b, a).phase_pow;
  return fwd == bwd;
}

/// Sparse complex-linear combination of Pauli strings of a fixed length.
/// Terms are held in deterministic (lexicographic) order.
class PauliPolynomial {
 public:
  using TermMap = std::map<PauliString, complex>;

  PauliPolynomial() : n_qubits_(0) {}
  explicit PauliPolynomial(std::size_t n_qubits) : n_qubits_(n_qubits) {
    if (n_qubits == 0) throw std::invalid_argument("PauliPolynomial: n_qubits must be >= 1");
  }

  static PauliPolynomial identity(std::size_t n_qubits, complex coeff = 1.0) {
    PauliPolynomial p(n_qubits);
    p.add(PauliString(n_qubits), coeff);
    return p;
  }

  /// Single term from a string spec such as "XZI".
  static PauliPolynomial term(const std::string& s, complex coeff = 1.0) {
    PauliPolynomial p(s.size());
    p.add(PauliString(s), coeff);
    return p;
  }

  std::size_t n_qubits() const { return n_qubits_; }
  const TermMap& terms() const { return terms_; }
  std::size_t support_size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  complex coeff(const PauliString& s) const {
    auto it = terms_.find(s);
    return it == terms_.end() ? complex(0.0) : it->second;
  }
  complex coeff(const std::string& s) const { return coeff(PauliString(s)); }

  void add(const PauliString& s, complex c) {
    if (s.size() != n_qubits_) throw std::invalid_argument("PauliPolynomial::add: length mismatch");
    auto [it, inserted] = terms_.emplace(s, c);
    if (!inserted) it->second += c;
    if (std::abs(it->second) < kPruneTol) terms_.erase(it);
  }

  PauliPolynomial& operator+=(const PauliPolynomial& other) {
    check_same_size(other);
    for (const auto& [s, c] : other.terms_) add(s, c);
    return *this;
  }
  PauliPolynomial& operator-=(const PauliPolynomial& other) {
    check_same_size(other);
    for (const auto& [s, c] : other.terms_) add(s, -c);
    return *this;
  }
  PauliPolynomial& operator*=(complex scale) {
    for (auto& [s, c] : terms_) c *= scale;
    prune();
    return *this;
  }

  friend PauliPolynomial operator+(PauliPolynomial a, const PauliPolynomial& b) { return a += b; }
  friend PauliPolynomial operator-(PauliPolynomial a, const PauliPolynomial& b) { return a -= b; }
  friend PauliPolynomial operator*(PauliPolynomial a, complex s) { return a *= s; }
  friend PauliPolynomial operator*(complex s, PauliPolynomial a) { return a *= s; }

  bool is_hermitian(double tol = kPruneTol) const {
    for (const auto& [s, c] : terms_)
      if (std::abs(c.imag()) > tol) return false;
    return true;
  }

  /// Coefficient-wise complex conjugate; for Pauli expansions this is the
  /// operator adjoint since every string is Hermitian.
  PauliPolynomial adjoint() const {
    PauliPolynomial out(n_qubits_);
    for (const auto& [s, c] : terms_) out.add(s, std::conj(c));
    return out;
  }

  /// Drop the imaginary parts (used after operations known to produce
  /// Hermitian results up to roundoff).
  PauliPolynomial real_part() const {
    PauliPolynomial out(n_qubits_);
    for (const auto& [s, c] : terms_) out.add(s, complex(c.real(), 0.0));
    return out;
  }

  double max_abs_coeff() const {
    double m = 0.0;
    for (const auto& [s, c] : terms_) m = std::max(m, std::abs(c));
    return m;
  }

  double norm2() const {
    double n = 0.0;
    for (const auto& [s, c] : terms_) n += std::norm(c);
    return std::sqrt(n);
  }

  void prune(double tol = kPruneTol) {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (std::abs(it->second) < tol)
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  void check_same_size(const PauliPolynomial& other) const {
    if (n_qubits_ != other.n_qubits_)
      throw std::invalid_argument("PauliPolynomial: dimension mismatch");
  }

 private:
  std::size_t n_qubits_;
  TermMap terms_;
};

/// Coefficients of the operator product AB.
inline PauliPolynomial poly_product(const PauliPolynomial& a, const PauliPolynomial& b) {
  a.check_same_size(b);
  PauliPolynomial out(a.n_qubits());
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      const auto prod = mul_strings(sa, sb);
      out.add(prod.string, ca * cb * phase_value(prod.phase_pow));
    }
  }
  return out;
}

/// Coefficients of -i[A, B]; real whenever A and B are Hermitian.
inline PauliPolynomial commutator_poly(const PauliPolynomial& a, const PauliPolynomial& b) {
  a.check_same_size(b);
  PauliPolynomial out(a.n_qubits());
  const complex minus_i(0.0, -1.0);
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      if (strings_commute(sa, sb)) continue;
      // anticommuting strings: ab - ba = 2ab
      const auto prod = mul_strings(sa, sb);
      out.add(prod.string, minus_i * 2.0 * ca * cb * phase_value(prod.phase_pow));
    }
  }
  return out;
}

/// Coefficients of {A, B}.
inline PauliPolynomial anticommutator_poly(const PauliPolynomial& a, const PauliPolynomial& b) {
  a.check_same_size(b);
  PauliPolynomial out(a.n_qubits());
  for (const auto& [sa, ca] : a.terms()) {
    for (const auto& [sb, cb] : b.terms()) {
      if (!strings_commute(sa, sb)) continue;
      const auto prod = mul_strings(sa, sb);
      out.add(prod.string, 2.0 * ca * cb * phase_value(prod.phase_pow));
    }
  }
  return out;
}

inline double max_coeff_deviation(const PauliPolynomial& a, const PauliPolynomial& b) {
  a.check_same_size(b);
  double m = 0.0;
  for (const auto& [s, c] : a.terms()) m = std::max(m, std::abs(c - b.coeff(s)));
  for (const auto& [s, c] : b.terms()) m = std::max(m, std::abs(c - a.coeff(s)));
  return m;
}

}  // namespace spinphase
