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

// Spin-1 angular momentum operators and the closed-form unitaries built from
// them. All matrices here are in the angular-momentum ordering
// (m=+1, m=0, m=-1) unless explicitly reordered.
//
// Because J_l^3 = J_l for spin 1, every exponential of J_l or J_l^2 is a
// quadratic polynomial in J_l; no general matrix exponential is needed.

#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "qpf/core.hpp"

namespace qpf {

enum class Axis { x, y, z };

inline constexpr std::array<Axis, 3> kAxes{Axis::x, Axis::y, Axis::z};

inline char axis_name(Axis a) {
  switch (a) {
    case Axis::x: return 'x';
    case Axis::y: return 'y';
    case Axis::z: return 'z';
  }
  return '?';
}

inline Axis parse_axis(std::string_view s) {
  if (s == "x") return Axis::x;
  if (s == "y") return Axis::y;
  if (s == "z") return Axis::z;
  throw ParseError("unknown axis '" + std::string(s) + "'");
}

/// [J_l] for j = 1.
inline HermitianOperator angular_momentum(Axis axis) {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix j = Matrix::Zero(3, 3);
  switch (axis) {
    case Axis::x:
      j(0, 1) = j(1, 0) = j(1, 2) = j(2, 1) = r;
      break;
    case Axis::y:
      j(0, 1) = j(1, 2) = Complex(0.0, -r);
      j(1, 0) = j(2, 1) = Complex(0.0, r);
      break;
    case Axis::z:
      j(0, 0) = 1.0;
      j(2, 2) = -1.0;
      break;
  }
  return HermitianOperator(std::move(j));
}

/// [J_l^2], the matrix square of angular_momentum(axis).
inline HermitianOperator angular_momentum_squared(Axis axis) {
  const Matrix j = angular_momentum(axis).matrix();
  return HermitianOperator(j * j);
}

/// R(l, phi) = exp(i phi J_l) = I + i sin(phi) J_l + (cos(phi) - 1) J_l^2.
inline UnitaryMatrix rotation(Axis axis, double phi) {
  require_finite(phi, "rotation angle");
  const Matrix j = angular_momentum(axis).matrix();
  const Matrix j2 = angular_momentum_squared(axis).matrix();
  Matrix u = Matrix::Identity(3, 3) + kI * std::sin(phi) * j +
             (std::cos(phi) - 1.0) * j2;
  return UnitaryMatrix(std::move(u), kExactTol);
}

/// U_oat(l, phi) = exp(i phi J_l^2) = I + (e^{i phi} - 1) J_l^2.
inline UnitaryMatrix oat(Axis axis, double phi) {
  require_finite(phi, "twisting angle");
  const Matrix j2 = angular_momentum_squared(axis).matrix();
  Matrix u = Matrix::Identity(3, 3) + (cis(phi) - 1.0) * j2;
  return UnitaryMatrix(std::move(u), kExactTol);
}

/// The magic angle arctan(sqrt 2).
inline double magic_angle() { return std::atan(std::sqrt(2.0)); }

// ---------------------------------------------------------------------------
// The Pegg-Barnett phase operator Theta_z = F J_z F^dagger, three ways.

/// Closed-form matrix (1/sqrt3) [[0,i,-i],[-i,0,i],[i,-i,0]].
inline HermitianOperator theta_z_direct() {
  const double r = 1.0 / std::sqrt(3.0);
  const Complex p(0.0, r);
  Matrix t(3, 3);
  t << 0.0, p, -p,
       -p, 0.0, p,
       p, -p, 0.0;
  return HermitianOperator(std::move(t));
}

/// sqrt(1/3) {J_y, J_x} - sqrt(2/3) J_y.
inline HermitianOperator theta_z_anticommutator() {
  const Matrix jx = angular_momentum(Axis::x).matrix();
  const Matrix jy = angular_momentum(Axis::y).matrix();
  const Matrix anti = jy * jx + jx * jy;
  return HermitianOperator(std::sqrt(1.0 / 3.0) * anti - std::sqrt(2.0 / 3.0) * jy);
}

/// cos(alpha) {J_y, J_x} - sin(alpha) J_y; equals Theta_z at the magic angle.
inline HermitianOperator theta_z_anticommutator(double alpha) {
  require_finite(alpha, "alpha");
  const Matrix jx = angular_momentum(Axis::x).matrix();
  const Matrix jy = angular_momentum(Axis::y).matrix();
  const Matrix anti = jy * jx + jx * jy;
  return HermitianOperator(std::cos(alpha) * anti - std::sin(alpha) * jy);
}

/// C(alpha) = U_oat(y, -pi/2) R(x, -alpha). Conjugating J_z by C(magic_angle)
/// gives Theta_z.
inline UnitaryMatrix theta_z_conjugator(double alpha = magic_angle()) {
  return oat(Axis::y, -kPi / 2.0) * rotation(Axis::x, -alpha);
}

/// C J_z C^dagger.
inline HermitianOperator theta_z_conjugated(double alpha = magic_angle()) {
  const UnitaryMatrix c = theta_z_conjugator(alpha);
  const Matrix jz = angular_momentum(Axis::z).matrix();
  Matrix t = c.matrix() * jz * c.matrix().adjoint();
  return HermitianOperator(std::move(t));
}

/// Lipkin-Meshkov-Glick form of Theta_z^2: (1/3)(-sqrt2 J_x + 2 J_y^2 + J_z^2).
inline HermitianOperator theta_z_squared_lmg() {
  const Matrix jx = angular_momentum(Axis::x).matrix();
  const Matrix jy2 = angular_momentum_squared(Axis::y).matrix();
  const Matrix jz2 = angular_momentum_squared(Axis::z).matrix();
  return HermitianOperator((-std::sqrt(2.0) * jx + 2.0 * jy2 + jz2) / 3.0);
}

// ---------------------------------------------------------------------------
// Basis conventions.

/// Where each angular-momentum slot (m=+1, m=0, m=-1) sits in a given ordering.
class BasisConvention {
 public:
  /// The identity ordering [.]_j: m=+1, m=0, m=-1.
  static BasisConvention angular_momentum() { return BasisConvention({0, 1, 2}, "j"); }

  /// The computational ordering [.]_c: m=0 -> 0_L, m=+1 -> 1_L, m=-1 -> 2_L.
  static BasisConvention computational() { return BasisConvention({1, 0, 2}, "c"); }

  static BasisConvention from_slots(std::array<int, 3> slot_of_m, std::string name) {
    std::array<bool, 3> seen{};
    for (int s : slot_of_m) {
      if (s < 0 || s > 2 || seen[s]) {
        throw ValidationError("basis convention must be a permutation of {0,1,2}");
      }
      seen[s] = true;
    }
    return BasisConvention(slot_of_m, std::move(name));
  }

  static BasisConvention parse(std::string_view s) {
    if (s == "j" || s == "m" || s == "angular") return angular_momentum();
    if (s == "c" || s == "computational") return computational();
    throw ParseError("unknown basis convention '" + std::string(s) + "'");
  }

  int slot_of_m(int am_slot) const { return slot_of_m_[am_slot]; }

  int am_slot_at(int slot) const {
    for (int a = 0; a < 3; ++a) {
      if (slot_of_m_[a] == slot) return a;
    }
    return -1;
  }

  const std::string& name() const { return name_; }

  friend bool operator==(const BasisConvention& a, const BasisConvention& b) {
    return a.slot_of_m_ == b.slot_of_m_;
  }

 private:
  BasisConvention(std::array<int, 3> slots, std::string name)
      : slot_of_m_(slots), name_(std::move(name)) {}

  std::array<int, 3> slot_of_m_;
  std::string name_;
};

/// perm[i] = index in `from` ordering of the basis vector at index i in `to`
/// ordering, for a register of `qutrits` qutrits.
inline std::vector<Index> basis_permutation(const BasisConvention& from,
                                            const BasisConvention& to,
                                            int qutrits) {
  const Index dim = pow3(qutrits);
  std::vector<Index> perm(static_cast<size_t>(dim));
  for (Index i = 0; i < dim; ++i) {
    Index rest = i;
    Index out = 0;
    Index place = 1;
    for (int k = 0; k < qutrits; ++k) {
      const int slot = static_cast<int>(rest % 3);
      rest /= 3;
      out += place * from.slot_of_m(to.am_slot_at(slot));
      place *= 3;
    }
    perm[static_cast<size_t>(i)] = out;
  }
  return perm;
}

/// Simultaneous row/column permutation taking a matrix written in `from`
/// ordering to `to` ordering, per qutrit slot.
inline Matrix reorder(const Matrix& m, const BasisConvention& from,
                      const BasisConvention& to) {
  if (m.rows() != m.cols()) throw ShapeError("reorder needs a square matrix");
  const int k = qutrit_count(m.rows());
  if (k < 0) {
    throw ShapeError("dimension " + std::to_string(m.rows()) +
                     " is not a power of 3");
  }
  const auto perm = basis_permutation(from, to, k);
  Matrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      out(i, j) = m(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]);
    }
  }
  return out;
}

inline UnitaryMatrix reorder(const UnitaryMatrix& m, const BasisConvention& from,
                             const BasisConvention& to) {
  return UnitaryMatrix(reorder(m.matrix(), from, to));
}

inline HermitianOperator reorder(const HermitianOperator& m,
                                 const BasisConvention& from,
                                 const BasisConvention& to) {
  return HermitianOperator(reorder(m.matrix(), from, to));
}

inline Vector reorder_state(const Vector& v, const BasisConvention& from,
                            const BasisConvention& to) {
  const int k = qutrit_count(v.size());
  if (k < 0) {
    throw ShapeError("dimension " + std::to_string(v.size()) +
                     " is not a power of 3");
  }
  const auto perm = basis_permutation(from, to, k);
  Vector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = v(perm[static_cast<size_t>(i)]);
  return out;
}

/// [.]_j -> [.]_c shorthand.
inline Matrix to_computational(const Matrix& m) {
  return reorder(m, BasisConvention::angular_momentum(), BasisConvention::computational());
}

inline Matrix to_angular(const Matrix& m) {
  return reorder(m, BasisConvention::computational(), BasisConvention::angular_momentum());
}

}  // namespace qpf
