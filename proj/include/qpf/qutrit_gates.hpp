// Copyright 2026 The qpf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// The qutrit Clifford+T catalogue in the computational basis
// {|0_L>, |1_L>, |2_L>}, two-qutrit registers in lexicographic order.

#pragma once

#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qpf/angle_expr.hpp"
#include "qpf/core.hpp"
#include "qpf/spin_algebra.hpp"

namespace qpf {

enum class GateKind { Z, X, F, T, S110, S120, S101, S102, X01, X02, X12, CZ, CX, CRz };

struct GateId {
  GateKind kind;
  std::optional<double> param;  // only CRz carries one

  static GateId cr_z(double phi) { return GateId{GateKind::CRz, phi}; }

  friend bool operator==(const GateId&, const GateId&) = default;
};

inline int gate_arity(GateKind k) {
  switch (k) {
    case GateKind::CZ:
    case GateKind::CX:
    case GateKind::CRz:
      return 2;
    default:
      return 1;
  }
}

inline bool is_clifford(GateKind k) {
  return k != GateKind::T && k != GateKind::CRz;
}

inline std::string format_real(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

inline std::string gate_name(const GateId& id) {
  switch (id.kind) {
    case GateKind::Z: return "Z";
    case GateKind::X: return "X";
    case GateKind::F: return "F";
    case GateKind::T: return "T";
    case GateKind::S110: return "S(1,1,0)";
    case GateKind::S120: return "S(1,2,0)";
    case GateKind::S101: return "S(1,0,1)";
    case GateKind::S102: return "S(1,0,2)";
    case GateKind::X01: return "X01";
    case GateKind::X02: return "X02";
    case GateKind::X12: return "X12";
    case GateKind::CZ: return "CZ";
    case GateKind::CX: return "CX";
    case GateKind::CRz: return "CR(z," + format_real(id.param.value_or(0.0)) + ")";
  }
  return "?";
}

/// Accepts the names produced by gate_name plus the compact spellings S110,
/// S120, S101, S102, the alias S(2,0,0) for X12, and CR(z,<angle-expr>).
inline GateId parse_gate(std::string_view name) {
  struct Entry {
    std::string_view name;
    GateKind kind;
  };
  static constexpr Entry kNames[] = {
      {"Z", GateKind::Z},           {"X", GateKind::X},
      {"F", GateKind::F},           {"T", GateKind::T},
      {"S(1,1,0)", GateKind::S110}, {"S110", GateKind::S110},
      {"S(1,2,0)", GateKind::S120}, {"S120", GateKind::S120},
      {"S(1,0,1)", GateKind::S101}, {"S101", GateKind::S101},
      {"S(1,0,2)", GateKind::S102}, {"S102", GateKind::S102},
      {"X01", GateKind::X01},       {"X02", GateKind::X02},
      {"X12", GateKind::X12},       {"S(2,0,0)", GateKind::X12},
      {"CZ", GateKind::CZ},         {"CX", GateKind::CX},
  };
  for (const auto& e : kNames) {
    if (e.name == name) return GateId{e.kind, std::nullopt};
  }
  constexpr std::string_view prefix = "CR(z,";
  if (name.substr(0, prefix.size()) == prefix && name.size() > prefix.size() &&
      name.back() == ')') {
    const auto arg = name.substr(prefix.size(), name.size() - prefix.size() - 1);
    try {
      return GateId::cr_z(parse_angle(arg));
    } catch (const ParseError& e) {
      throw CatalogueError(std::string("bad CR(z,phi) angle: ") + e.what());
    }
  }
  throw CatalogueError("unknown gate '" + std::string(name) + "'");
}

/// Every catalogue entry, with CR(z,phi) at the supplied sample angles.
inline std::vector<GateId> catalogue(const std::vector<double>& cr_angles = {}) {
  std::vector<GateId> out;
  for (GateKind k : {GateKind::Z, GateKind::X, GateKind::F, GateKind::T, GateKind::S110,
                     GateKind::S120, GateKind::S101, GateKind::S102, GateKind::X01,
                     GateKind::X02, GateKind::X12, GateKind::CZ, GateKind::CX}) {
    out.push_back(GateId{k, std::nullopt});
  }
  for (double phi : cr_angles) out.push_back(GateId::cr_z(phi));
  return out;
}

/// omega^k with k reduced mod 3.
inline Complex omega_pow(long k) {
  const long r = ((k % 3) + 3) % 3;
  return cis(kTwoPi * static_cast<double>(r) / 3.0);
}

namespace detail {

inline Matrix fourier_matrix() {
  Matrix f(3, 3);
  const double norm = 1.0 / std::sqrt(3.0);
  for (int qp = 0; qp < 3; ++qp) {
    for (int q = 0; q < 3; ++q) f(qp, q) = norm * omega_pow(q * qp);
  }
  return f;
}

inline Matrix permutation(const int (&image)[3]) {
  Matrix p = Matrix::Zero(3, 3);
  for (int q = 0; q < 3; ++q) p(image[q], q) = 1.0;
  return p;
}

// S(1, xi, 0): the q^2/2 exponent uses 2^{-1} = 2 (mod 3).
inline Matrix shear_diagonal(int xi) {
  Matrix s = Matrix::Zero(3, 3);
  for (int q = 0; q < 3; ++q) s(q, q) = omega_pow(2L * xi * q * q);
  return s;
}

inline Matrix momentum_shear(int xi) {
  const Matrix f = fourier_matrix();
  Matrix d = Matrix::Zero(3, 3);
  for (int q = 0; q < 3; ++q) d(q, q) = omega_pow(-2L * xi * q * q);
  return f * d * f.adjoint();
}

inline Matrix controlled_matrix(const Matrix& w) {
  Matrix c = Matrix::Zero(9, 9);
  c.block(0, 0, 3, 3) = Matrix::Identity(3, 3);
  c.block(3, 3, 3, 3) = w;
  c.block(6, 6, 3, 3) = w * w;
  return c;
}

inline Matrix cr_z_angular(double phi) {
  Matrix d = Matrix::Zero(9, 9);
  const int m[3] = {1, 0, -1};
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) d(3 * a + b, 3 * a + b) = cis(phi * m[a] * m[b]);
  }
  return d;
}

}  // namespace detail

/// Controlled-W = |0><0| (x) I + |1><1| (x) W + |2><2| (x) W^2.
inline UnitaryMatrix controlled(const Matrix& w) {
  if (w.rows() != 3 || w.cols() != 3) throw ShapeError("controlled() needs a 3x3 gate");
  if (!(unitarity_defect(w) <= kComposedTol)) {
    throw ValidationError("controlled() needs a unitary target gate");
  }
  return UnitaryMatrix(detail::controlled_matrix(w));
}

/// Catalogue matrix in the computational basis.
inline UnitaryMatrix gate(const GateId& id) {
  switch (id.kind) {
    case GateKind::Z: {
      Matrix z = Matrix::Zero(3, 3);
      for (int q = 0; q < 3; ++q) z(q, q) = omega_pow(q);
      return UnitaryMatrix(z, kExactTol);
    }
    case GateKind::X:
      return UnitaryMatrix(detail::permutation({1, 2, 0}), kExactTol);
    case GateKind::F:
      return UnitaryMatrix(detail::fourier_matrix(), kExactTol);
    case GateKind::T: {
      Matrix t = Matrix::Zero(3, 3);
      t(0, 0) = 1.0;
      t(1, 1) = cis(kTwoPi / 9.0);
      t(2, 2) = cis(-kTwoPi / 9.0);
      return UnitaryMatrix(t, kExactTol);
    }
    case GateKind::S110: return UnitaryMatrix(detail::shear_diagonal(1), kExactTol);
    case GateKind::S120: return UnitaryMatrix(detail::shear_diagonal(2), kExactTol);
    case GateKind::S101: return UnitaryMatrix(detail::momentum_shear(1), kExactTol);
    case GateKind::S102: return UnitaryMatrix(detail::momentum_shear(2), kExactTol);
    case GateKind::X01: return UnitaryMatrix(detail::permutation({1, 0, 2}), kExactTol);
    case GateKind::X02: return UnitaryMatrix(detail::permutation({2, 1, 0}), kExactTol);
    case GateKind::X12: return UnitaryMatrix(detail::permutation({0, 2, 1}), kExactTol);
    case GateKind::CZ: return controlled(gate(GateId{GateKind::Z, {}}));
    case GateKind::CX: return controlled(gate(GateId{GateKind::X, {}}));
    case GateKind::CRz: {
      if (!id.param) throw CatalogueError("CR(z,phi) needs an angle");
      require_finite(*id.param, "CR(z,phi) angle");
      return UnitaryMatrix(to_computational(detail::cr_z_angular(*id.param)));
    }
  }
  throw CatalogueError("unknown gate kind");
}

inline UnitaryMatrix gate(GateKind kind) { return gate(GateId{kind, std::nullopt}); }

/// |p_q> = F|q>.
inline Vector momentum_state(int q) {
  if (q < 0 || q > 2) throw RangeError("momentum index must be 0, 1 or 2");
  return detail::fourier_matrix().col(q);
}

inline Vector basis_state(int q) {
  if (q < 0 || q > 2) throw RangeError("basis index must be 0, 1 or 2");
  Vector v = Vector::Zero(3);
  v(q) = 1.0;
  return v;
}

/// X^j Z^k, exponents taken mod 3.
inline UnitaryMatrix pauli_product(int j, int k) {
  const Matrix x = gate(GateKind::X).matrix();
  const Matrix z = gate(GateKind::Z).matrix();
  Matrix out = Matrix::Identity(3, 3);
  for (int i = 0; i < ((j % 3) + 3) % 3; ++i) out = x * out;
  for (int i = 0; i < ((k % 3) + 3) % 3; ++i) out = out * z;
  return UnitaryMatrix(out, kExactTol);
}

// ---------------------------------------------------------------------------
// Phase-aware comparison.

struct PhaseEquivalenceReport {
  bool equal_up_to_phase = false;
  bool phase_defined = false;
  Complex phase{0.0, 0.0};  // b ~= phase * a
  double max_residual = 0.0;
  double overlap = 0.0;  // |tr(a^dagger b)| / dim
};

/// Compares b against a up to a global phase using the dimension-normalized
/// trace overlap c = tr(a^dagger b)/dim.
inline PhaseEquivalenceReport equal_up_to_phase(const Matrix& a, const Matrix& b,
                                                double tol = kComposedTol) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw ShapeError("equal_up_to_phase: dimension mismatch");
  }
  PhaseEquivalenceReport r;
  const Complex c = (a.adjoint() * b).trace() / static_cast<double>(a.rows());
  r.overlap = std::abs(c);
  if (r.overlap < tol || r.overlap == 0.0) {
    r.max_residual = max_abs_diff(a, b);
    return r;
  }
  r.phase_defined = true;
  r.phase = c / r.overlap;
  r.max_residual = max_abs_diff(b, r.phase * a);
  r.equal_up_to_phase = r.max_residual <= tol && r.overlap >= 1.0 - tol;
  return r;
}

// ---------------------------------------------------------------------------
// Pauli group membership and Clifford normalization.

struct PauliMatch {
  int x_power;
  int z_power;
  Complex phase;  // m = phase * X^j Z^k
};

/// Identifies m as a phase times X^j Z^k, if it is one.
inline std::optional<PauliMatch> match_pauli(const Matrix& m, double tol = kComposedTol) {
  if (m.rows() != 3 || m.cols() != 3) throw ShapeError("Pauli matching needs a 3x3 matrix");
  for (int j = 0; j < 3; ++j) {
    for (int k = 0; k < 3; ++k) {
      const auto r = equal_up_to_phase(pauli_product(j, k).matrix(), m, tol);
      if (r.equal_up_to_phase) return PauliMatch{j, k, r.phase};
    }
  }
  return std::nullopt;
}

struct CliffordConjugation {
  bool maps_to_pauli = false;
  std::optional<PauliMatch> image;  // C P C^dagger, when it is a Pauli
};

/// Whether c p c^dagger is again (a phase times) a Pauli product.
inline CliffordConjugation clifford_conjugation_check(const Matrix& c, const Matrix& p,
                                                      double tol = kComposedTol) {
  if (!match_pauli(p, tol)) {
    throw ValidationError("clifford_conjugation_check: p is not a Pauli product");
  }
  CliffordConjugation out;
  out.image = match_pauli(c * p * c.adjoint(), tol);
  out.maps_to_pauli = out.image.has_value();
  return out;
}

}  // namespace qpf
