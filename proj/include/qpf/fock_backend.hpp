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

// Truncated multimode Fock simulator for the two-mode qutrit encoding
//
//   |0_L> = |1,1>,  |1_L> = |2,0>,  |2_L> = |0,2>
//
// via the Jordan-Schwinger map J_x = (a^dag b + a b^dag)/2,
// J_y = (a^dag b - a b^dag)/2i, J_z = (N_a - N_b)/2. Qutrit s occupies modes
// (2s, 2s+1). Kerr strengths are folded into angles: every unitary here is
// exp(i * angle * integer-valued polynomial in number operators).

#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qpf/compiler.hpp"
#include "qpf/core.hpp"
#include "qpf/spin_algebra.hpp"

namespace qpf {

inline constexpr int kDefaultCutoff = 4;

/// Occupation-number space of `modes` modes, each truncated at `cutoff`
/// photons. Basis vectors |n_1, ..., n_modes> in lexicographic order
/// (mode 0 most significant).
class FockSpace {
 public:
  FockSpace(int modes, int cutoff) : modes_(modes), cutoff_(cutoff) {
    if (modes < 1) throw DomainError("Fock space needs at least one mode");
    if (cutoff < 1) throw DomainError("Fock cutoff must be at least 1");
    dim_ = 1;
    for (int m = 0; m < modes; ++m) {
      dim_ *= cutoff + 1;
      if (dim_ > 1'000'000) throw CapacityError("Fock space too large for dense simulation");
    }
  }

  int modes() const { return modes_; }
  int cutoff() const { return cutoff_; }
  Index dim() const { return dim_; }

  Index index(const std::vector<int>& occ) const {
    if (static_cast<int>(occ.size()) != modes_) {
      throw ArityError("occupation list has " + std::to_string(occ.size()) +
                       " entries, space has " + std::to_string(modes_) + " modes");
    }
    Index idx = 0;
    for (int n : occ) {
      if (n < 0 || n > cutoff_) {
        throw RangeError("occupation " + std::to_string(n) + " outside [0, " +
                         std::to_string(cutoff_) + "]");
      }
      idx = idx * (cutoff_ + 1) + n;
    }
    return idx;
  }

  std::vector<int> occupations(Index idx) const {
    std::vector<int> occ(static_cast<size_t>(modes_));
    for (int m = modes_ - 1; m >= 0; --m) {
      occ[static_cast<size_t>(m)] = static_cast<int>(idx % (cutoff_ + 1));
      idx /= cutoff_ + 1;
    }
    return occ;
  }

  void check_mode(int mode) const {
    if (mode < 0 || mode >= modes_) {
      throw RangeError("mode " + std::to_string(mode) + " outside [0, " +
                       std::to_string(modes_) + ")");
    }
  }

  friend bool operator==(const FockSpace&, const FockSpace&) = default;

 private:
  int modes_;
  int cutoff_;
  Index dim_ = 1;
};

using ModePair = std::pair<int, int>;

/// Modes carrying qutrit `s`.
inline ModePair qutrit_modes(int s) { return {2 * s, 2 * s + 1}; }

class FockState {
 public:
  FockState(FockSpace space, Vector amplitudes)
      : space_(space), amps_(std::move(amplitudes)) {
    if (amps_.size() != space_.dim()) throw ShapeError("state size does not match Fock space");
  }

  static FockState basis(const FockSpace& space, const std::vector<int>& occ) {
    Vector v = Vector::Zero(space.dim());
    v(space.index(occ)) = 1.0;
    return FockState(space, std::move(v));
  }

  const FockSpace& space() const { return space_; }
  const Vector& amplitudes() const { return amps_; }
  Complex amplitude(const std::vector<int>& occ) const { return amps_(space_.index(occ)); }
  double norm() const { return amps_.norm(); }

 private:
  FockSpace space_;
  Vector amps_;
};

class FockOperator {
 public:
  FockOperator(FockSpace space, Matrix m) : space_(space), m_(std::move(m)) {
    if (m_.rows() != space_.dim() || m_.cols() != space_.dim()) {
      throw ShapeError("operator size does not match Fock space");
    }
  }

  static FockOperator identity(const FockSpace& space) {
    return FockOperator(space, Matrix::Identity(space.dim(), space.dim()));
  }

  const FockSpace& space() const { return space_; }
  const Matrix& matrix() const { return m_; }

  FockOperator adjoint() const { return FockOperator(space_, m_.adjoint()); }

  /// Product with the same ordered, zero-skipping summation as apply().
  friend FockOperator operator*(const FockOperator& a, const FockOperator& b) {
    if (!(a.space_ == b.space_)) throw ShapeError("operators live on different Fock spaces");
    Matrix out(a.m_.rows(), b.m_.cols());
    for (Index j = 0; j < b.m_.cols(); ++j) out.col(j) = a.apply_sparse(b.m_.col(j));
    return FockOperator(a.space_, std::move(out));
  }
  friend FockOperator operator+(const FockOperator& a, const FockOperator& b) {
    if (!(a.space_ == b.space_)) throw ShapeError("operators live on different Fock spaces");
    return FockOperator(a.space_, a.m_ + b.m_);
  }
  friend FockOperator operator-(const FockOperator& a, const FockOperator& b) {
    if (!(a.space_ == b.space_)) throw ShapeError("operators live on different Fock spaces");
    return FockOperator(a.space_, a.m_ - b.m_);
  }
  friend FockOperator operator*(Complex c, const FockOperator& a) {
    return FockOperator(a.space_, c * a.m_);
  }

  /// Applies the operator touching only nonzero entries, summed in ascending
  /// column order. Results on a number-conserving sector therefore do not
  /// depend on how many other sectors the truncation keeps.
  FockState apply(const FockState& s) const {
    if (!(s.space() == space_)) throw ShapeError("state and operator spaces differ");
    return FockState(space_, apply_sparse(s.amplitudes()));
  }

  Vector apply_sparse(const Vector& v) const {
    std::vector<Index> nz;
    for (Index j = 0; j < v.size(); ++j) {
      if (v(j) != Complex(0.0, 0.0)) nz.push_back(j);
    }
    Vector out = Vector::Zero(v.size());
    for (Index i = 0; i < m_.rows(); ++i) {
      Complex acc(0.0, 0.0);
      for (Index j : nz) {
        const Complex e = m_(i, j);
        if (e != Complex(0.0, 0.0)) acc += e * v(j);
      }
      out(i) = acc;
    }
    return out;
  }

 private:
  FockSpace space_;
  Matrix m_;
};

// ---------------------------------------------------------------------------
// Primitive operators.

enum class Ladder { create, annihilate };

inline FockOperator ladder(int mode, Ladder kind, const FockSpace& space) {
  space.check_mode(mode);
  Matrix m = Matrix::Zero(space.dim(), space.dim());
  for (Index j = 0; j < space.dim(); ++j) {
    auto occ = space.occupations(j);
    int& n = occ[static_cast<size_t>(mode)];
    if (kind == Ladder::annihilate) {
      if (n == 0) continue;
      const double amp = std::sqrt(static_cast<double>(n));
      --n;
      m(space.index(occ), j) = amp;
    } else {
      if (n == space.cutoff()) continue;  // truncated
      const double amp = std::sqrt(static_cast<double>(n + 1));
      ++n;
      m(space.index(occ), j) = amp;
    }
  }
  return FockOperator(space, std::move(m));
}

/// Diagonal operator with entries f(occupations).
inline FockOperator diagonal_operator(const FockSpace& space,
                                      const std::function<Complex(const std::vector<int>&)>& f) {
  Matrix m = Matrix::Zero(space.dim(), space.dim());
  for (Index i = 0; i < space.dim(); ++i) m(i, i) = f(space.occupations(i));
  return FockOperator(space, std::move(m));
}

inline FockOperator number_operator(int mode, const FockSpace& space) {
  space.check_mode(mode);
  return diagonal_operator(space, [mode](const std::vector<int>& occ) {
    return Complex(occ[static_cast<size_t>(mode)], 0.0);
  });
}

namespace detail {

inline void check_pair(const ModePair& pair, const FockSpace& space) {
  space.check_mode(pair.first);
  space.check_mode(pair.second);
  if (pair.first == pair.second) {
    throw DomainError("Jordan-Schwinger pair needs two distinct modes");
  }
}

// a^dag b with the truncation of the space.
inline Matrix hop(const ModePair& pair, const FockSpace& space) {
  Matrix m = Matrix::Zero(space.dim(), space.dim());
  const auto a = static_cast<size_t>(pair.first);
  const auto b = static_cast<size_t>(pair.second);
  for (Index j = 0; j < space.dim(); ++j) {
    auto occ = space.occupations(j);
    if (occ[b] == 0 || occ[a] == space.cutoff()) continue;
    const double amp = std::sqrt(static_cast<double>(occ[a] + 1) * occ[b]);
    ++occ[a];
    --occ[b];
    m(space.index(occ), j) = amp;
  }
  return m;
}

}  // namespace detail

/// Jordan-Schwinger image of J_axis on the mode pair (a, b).
inline FockOperator jordan_schwinger(Axis axis, const ModePair& pair, const FockSpace& space) {
  detail::check_pair(pair, space);
  if (axis == Axis::z) {
    const auto a = static_cast<size_t>(pair.first);
    const auto b = static_cast<size_t>(pair.second);
    return diagonal_operator(space, [a, b](const std::vector<int>& occ) {
      return Complex(0.5 * (occ[a] - occ[b]), 0.0);
    });
  }
  const Matrix up = detail::hop(pair, space);  // a^dag b
  const Matrix down = up.adjoint();            // a b^dag
  if (axis == Axis::x) return FockOperator(space, 0.5 * (up + down));
  return FockOperator(space, (up - down) / Complex(0.0, 2.0));
}

/// N_a + N_b for the pair.
inline FockOperator pair_number(const ModePair& pair, const FockSpace& space) {
  detail::check_pair(pair, space);
  return number_operator(pair.first, space) + number_operator(pair.second, space);
}

enum class KerrKind { self, cross };

/// chi N_m^2 (self) or chi' N_m N_m' (cross).
inline FockOperator kerr_hamiltonian(KerrKind kind, const std::vector<int>& modes,
                                     double strength, const FockSpace& space) {
  require_finite(strength, "Kerr strength");
  if (kind == KerrKind::self) {
    if (modes.size() != 1) throw ArityError("self-Kerr acts on exactly one mode");
    const int m = modes[0];
    space.check_mode(m);
    return diagonal_operator(space, [m, strength](const std::vector<int>& occ) {
      const double n = occ[static_cast<size_t>(m)];
      return Complex(strength * n * n, 0.0);
    });
  }
  if (modes.size() != 2 || modes[0] == modes[1]) {
    throw ArityError("cross-Kerr acts on exactly two distinct modes");
  }
  const int a = modes[0];
  const int b = modes[1];
  space.check_mode(a);
  space.check_mode(b);
  return diagonal_operator(space, [a, b, strength](const std::vector<int>& occ) {
    return Complex(strength * occ[static_cast<size_t>(a)] * occ[static_cast<size_t>(b)], 0.0);
  });
}

/// exp(i angle N_a N_b): a cross-Kerr pulse of duration angle / chi'.
inline FockOperator cross_kerr_unitary(double angle, int a, int b, const FockSpace& space) {
  require_finite(angle, "cross-Kerr angle");
  if (a == b) throw ArityError("cross-Kerr acts on exactly two distinct modes");
  space.check_mode(a);
  space.check_mode(b);
  return diagonal_operator(space, [=](const std::vector<int>& occ) {
    return cis(angle * occ[static_cast<size_t>(a)] * occ[static_cast<size_t>(b)]);
  });
}

/// exp(i angle N_m^2): a self-Kerr pulse of duration angle / chi.
inline FockOperator self_kerr_unitary(double angle, int m, const FockSpace& space) {
  require_finite(angle, "self-Kerr angle");
  space.check_mode(m);
  return diagonal_operator(space, [=](const std::vector<int>& occ) {
    const int n = occ[static_cast<size_t>(m)];
    return cis(angle * n * n);
  });
}

/// exp(i phi J_z) on the pair: a relative phase shift between the two modes.
inline FockOperator phase_shifter(double phi, const ModePair& pair, const FockSpace& space) {
  require_finite(phi, "phase shift");
  detail::check_pair(pair, space);
  const auto a = static_cast<size_t>(pair.first);
  const auto b = static_cast<size_t>(pair.second);
  return diagonal_operator(space, [=](const std::vector<int>& occ) {
    return cis(phi * 0.5 * (occ[a] - occ[b]));
  });
}

/// U_oat(z, phi) from two self-Kerr pulses, using
/// J_z^2 = N_a^2/2 + N_b^2/2 - N^2/4 with N fixed to `n`:
/// exp(i phi N_a^2 / 2) exp(i phi N_b^2 / 2) e^{-i phi n^2 / 4}.
inline FockOperator oat_via_self_kerr(double phi, const ModePair& pair, int n,
                                      const FockSpace& space) {
  require_finite(phi, "twisting angle");
  detail::check_pair(pair, space);
  const FockOperator ka = self_kerr_unitary(phi / 2.0, pair.first, space);
  const FockOperator kb = self_kerr_unitary(phi / 2.0, pair.second, space);
  const Complex sector_phase = cis(-phi * n * n / 4.0);
  return sector_phase * (ka * kb);
}

/// N_a N_b; equals |1,1><1,1| only on the n = 2 sector.
inline FockOperator projector_pi0(const ModePair& pair, const FockSpace& space) {
  detail::check_pair(pair, space);
  return kerr_hamiltonian(KerrKind::cross, {pair.first, pair.second}, 1.0, space);
}

/// Wraps an angle into [0, 2pi); used for Kerr pulses so durations are positive.
inline double positive_angle(double a) {
  double r = std::fmod(a, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r;
}

struct CrossKerrStep {
  int mode_a;
  int mode_b;
  double angle;  // in [0, 2pi)
};

/// The four cross-Kerr pulses realizing exp(i phi J_z^mu J_z^nu):
/// angles phi/4, -phi/4, -phi/4, phi/4 on (a a), (a b), (b a), (b b).
inline std::vector<CrossKerrStep> cross_kerr_schedule(double phi, int mu, int nu) {
  const auto [amu, bmu] = qutrit_modes(mu);
  const auto [anu, bnu] = qutrit_modes(nu);
  const double q = phi / 4.0;
  return {{amu, anu, positive_angle(q)},
          {amu, bnu, positive_angle(-q)},
          {bmu, anu, positive_angle(-q)},
          {bmu, bnu, positive_angle(q)}};
}

inline void check_subsystems(int mu, int nu, const FockSpace& space) {
  if (mu == nu || mu < 0 || nu < 0) throw ArityError("need two distinct qutrit subsystems");
  if (space.modes() % 2 != 0 || 2 * std::max(mu, nu) + 2 > space.modes()) {
    throw ArityError("space with " + std::to_string(space.modes()) +
                     " modes cannot hold qutrits " + std::to_string(mu) + " and " +
                     std::to_string(nu));
  }
}

inline FockOperator two_body_zz_via_cross_kerr(double phi, int mu, int nu,
                                               const FockSpace& space) {
  require_finite(phi, "coupling angle");
  check_subsystems(mu, nu, space);
  FockOperator u = FockOperator::identity(space);
  for (const auto& s : cross_kerr_schedule(phi, mu, nu)) {
    u = cross_kerr_unitary(s.angle, s.mode_a, s.mode_b, space) * u;
  }
  return u;
}

/// CZ between qutrits mu and nu: cross-Kerr angles pi/6, 11pi/6, 11pi/6, pi/6.
inline FockOperator cz_via_cross_kerr(int mu, int nu, const FockSpace& space) {
  return two_body_zz_via_cross_kerr(kTwoPi / 3.0, mu, nu, space);
}

/// exp(i theta J_axis) on the pair, axis x or y. The generator conserves the
/// pair's photon number, so each fixed-number block is exponentiated exactly
/// by Hermitian eigendecomposition.
inline FockOperator beam_splitter(double theta, Axis axis, const ModePair& pair,
                                  const FockSpace& space) {
  require_finite(theta, "beam-splitter angle");
  if (axis == Axis::z) throw DomainError("beam splitter axis must be x or y");
  const Matrix g = jordan_schwinger(axis, pair, space).matrix();
  // Block key: occupations with the pair collapsed to its total.
  std::map<std::vector<int>, std::vector<Index>> blocks;
  for (Index i = 0; i < space.dim(); ++i) {
    auto occ = space.occupations(i);
    occ[static_cast<size_t>(pair.first)] += occ[static_cast<size_t>(pair.second)];
    occ[static_cast<size_t>(pair.second)] = -1;
    blocks[occ].push_back(i);
  }
  Matrix u = Matrix::Zero(space.dim(), space.dim());
  for (const auto& [key, idx] : blocks) {
    const auto n = static_cast<Index>(idx.size());
    Matrix h(n, n);
    for (Index r = 0; r < n; ++r) {
      for (Index c = 0; c < n; ++c) h(r, c) = g(idx[r], idx[c]);
    }
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    Vector phases(n);
    for (Index k = 0; k < n; ++k) phases(k) = cis(theta * es.eigenvalues()(k));
    const Matrix block = es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
    for (Index r = 0; r < n; ++r) {
      for (Index c = 0; c < n; ++c) u(idx[r], idx[c]) = block(r, c);
    }
  }
  return FockOperator(space, std::move(u));
}

/// U_oat(l, phi) for l = x, y by rotating the z twist:
/// U_oat(y) = R(x, pi/2) U_oat(z) R(x, -pi/2), U_oat(x) = R(y, pi/2) U_oat(z) R(y, -pi/2).
inline FockOperator oat_fock(Axis axis, double phi, const ModePair& pair, int n,
                             const FockSpace& space) {
  const FockOperator twist = oat_via_self_kerr(phi, pair, n, space);
  if (axis == Axis::z) return twist;
  const Axis around = axis == Axis::y ? Axis::x : Axis::y;
  return beam_splitter(kPi / 2.0, around, pair, space) * twist *
         beam_splitter(-kPi / 2.0, around, pair, space);
}

// ---------------------------------------------------------------------------
// Encoded qutrit sector.

/// The qutrit encoding |0_L>=|1,1>, |1_L>=|2,0>, |2_L>=|0,2> on `qutrits`
/// consecutive mode pairs, all at total photon number 2.
class SectorEmbedding {
 public:
  explicit SectorEmbedding(int qutrits) : qutrits_(qutrits) {
    if (qutrits < 1) throw RangeError("sector needs at least one qutrit");
  }

  int qutrits() const { return qutrits_; }
  int total_n() const { return 2; }
  int modes() const { return 2 * qutrits_; }

  /// Mode occupations (n_a, n_b) encoding computational value q.
  static std::pair<int, int> encode(int q) {
    switch (q) {
      case 0: return {1, 1};
      case 1: return {2, 0};
      case 2: return {0, 2};
      default: throw RangeError("qutrit value must be 0, 1 or 2");
    }
  }

  /// Fock indices of the encoded computational basis, lexicographic.
  std::vector<Index> indices(const FockSpace& space) const {
    check_space(space);
    const Index dim = pow3(qutrits_);
    std::vector<Index> out;
    out.reserve(static_cast<size_t>(dim));
    for (Index c = 0; c < dim; ++c) {
      std::vector<int> occ(static_cast<size_t>(space.modes()), 0);
      Index rest = c;
      for (int s = qutrits_ - 1; s >= 0; --s) {
        const auto [na, nb] = encode(static_cast<int>(rest % 3));
        rest /= 3;
        occ[static_cast<size_t>(2 * s)] = na;
        occ[static_cast<size_t>(2 * s + 1)] = nb;
      }
      out.push_back(space.index(occ));
    }
    return out;
  }

  void check_space(const FockSpace& space) const {
    if (space.modes() != modes()) {
      throw ArityError("embedding of " + std::to_string(qutrits_) + " qutrit(s) needs " +
                       std::to_string(modes()) + " modes, space has " +
                       std::to_string(space.modes()));
    }
    if (space.cutoff() < 2) throw DomainError("qutrit encoding needs cutoff >= 2");
  }

  /// Embeds a 3^k computational-basis amplitude vector.
  FockState embed(const Vector& amplitudes, const FockSpace& space) const {
    if (amplitudes.size() != pow3(qutrits_)) throw ShapeError("amplitude vector has wrong size");
    const auto idx = indices(space);
    Vector v = Vector::Zero(space.dim());
    for (size_t c = 0; c < idx.size(); ++c) v(idx[c]) = amplitudes(static_cast<Index>(c));
    return FockState(space, std::move(v));
  }

  /// Amplitudes on the encoded basis (computational order) and the norm of
  /// everything outside it.
  std::pair<Vector, double> extract(const FockState& s) const {
    const auto idx = indices(s.space());
    Vector v(static_cast<Index>(idx.size()));
    std::vector<bool> in(static_cast<size_t>(s.space().dim()), false);
    for (size_t c = 0; c < idx.size(); ++c) {
      v(static_cast<Index>(c)) = s.amplitudes()(idx[c]);
      in[static_cast<size_t>(idx[c])] = true;
    }
    double outside = 0.0;
    for (Index i = 0; i < s.space().dim(); ++i) {
      if (!in[static_cast<size_t>(i)]) outside += std::norm(s.amplitudes()(i));
    }
    return {v, std::sqrt(outside)};
  }

 private:
  int qutrits_;
};

/// max(||P op (I-P)||_F, ||(I-P) op P||_F) with P the encoded-sector projector.
inline double sector_leakage(const FockOperator& op, const SectorEmbedding& emb) {
  const auto idx = emb.indices(op.space());
  std::vector<bool> in(static_cast<size_t>(op.space().dim()), false);
  for (Index i : idx) in[static_cast<size_t>(i)] = true;
  double out_of = 0.0;
  double into = 0.0;
  const Matrix& m = op.matrix();
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      const bool ri = in[static_cast<size_t>(i)];
      const bool cj = in[static_cast<size_t>(j)];
      if (ri && !cj) into += std::norm(m(i, j));
      if (!ri && cj) out_of += std::norm(m(i, j));
    }
  }
  return std::sqrt(std::max(into, out_of));
}

/// The 3^k x 3^k block of `op` on the encoded sector, in the requested
/// ordering. Throws LeakageError if op mixes the sector with its complement.
inline Matrix sector_restrict(const FockOperator& op, const SectorEmbedding& emb,
                              const BasisConvention& convention = BasisConvention::computational(),
                              double tol = kExactTol) {
  const double leak = sector_leakage(op, emb);
  if (!(leak <= tol)) {
    throw LeakageError("operator leaks out of the encoded sector (norm " +
                       std::to_string(leak) + ")", leak);
  }
  const auto idx = emb.indices(op.space());
  const auto n = static_cast<Index>(idx.size());
  Matrix r(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) r(i, j) = op.matrix()(idx[i], idx[j]);
  }
  return reorder(r, BasisConvention::computational(), convention);
}

// ---------------------------------------------------------------------------
// Pulse playback on the Fock backend.

/// Fock realization of a single pulse on a register of qutrit mode pairs.
inline FockOperator fock_pulse(const Pulse& p, const FockSpace& space) {
  switch (p.kind()) {
    case PulseKind::Rotation: {
      const ModePair pair = qutrit_modes(p.targets()[0]);
      if (p.axis() == Axis::z) return phase_shifter(p.angle(), pair, space);
      return beam_splitter(p.angle(), p.axis(), pair, space);
    }
    case PulseKind::Oat:
      return oat_fock(p.axis(), p.angle(), qutrit_modes(p.targets()[0]), 2, space);
    case PulseKind::TwoBodyZZ:
      return two_body_zz_via_cross_kerr(p.angle(), p.targets()[0], p.targets()[1], space);
    case PulseKind::GlobalPhase:
      return cis(p.angle()) * FockOperator::identity(space);
  }
  throw DomainError("unknown pulse kind");
}

struct SectorResult {
  Matrix restricted;     // computational ordering
  double leakage = 0.0;  // largest out-of-sector norm over encoded inputs
};

/// A pulse sequence lowered to Fock operators on 2 * register_size modes.
class FockCircuit {
 public:
  FockCircuit(const PulseSequence& seq, int cutoff = kDefaultCutoff)
      : space_(2 * seq.register_size(), cutoff), embedding_(seq.register_size()) {
    if (seq.register_size() > 2) {
      throw CapacityError("Fock playback supports at most 2 qutrits");
    }
    embedding_.check_space(space_);
    for (const auto& p : seq.pulses()) ops_.push_back(fock_pulse(p, space_));
  }

  const FockSpace& space() const { return space_; }
  const SectorEmbedding& embedding() const { return embedding_; }
  const std::vector<FockOperator>& operators() const { return ops_; }

  FockState apply(FockState s) const {
    for (const auto& op : ops_) s = op.apply(s);
    return s;
  }

  /// Action on every encoded basis state.
  SectorResult sector_action() const {
    const Index k = pow3(embedding_.qutrits());
    SectorResult r;
    r.restricted = Matrix::Zero(k, k);
    for (Index c = 0; c < k; ++c) {
      Vector e = Vector::Zero(k);
      e(c) = 1.0;
      const auto [amps, leak] = embedding_.extract(apply(embedding_.embed(e, space_)));
      r.restricted.col(c) = amps;
      r.leakage = std::max(r.leakage, leak);
    }
    return r;
  }

 private:
  FockSpace space_;
  SectorEmbedding embedding_;
  std::vector<FockOperator> ops_;
};

// ---------------------------------------------------------------------------
// Optical schedule: the primitive interactions behind a pulse sequence.

struct ScheduleStep {
  std::string element;  // beam-splitter, phase-shifter, self-kerr, cross-kerr, phase
  std::vector<int> modes;
  double angle;
  double duration;  // angle / strength for Kerr steps, 0 otherwise
};

inline std::vector<ScheduleStep> optical_schedule(const PulseSequence& seq, double chi = 1.0,
                                                  double chi_cross = 1.0) {
  require_finite(chi, "chi");
  require_finite(chi_cross, "chi'");
  if (chi <= 0.0 || chi_cross <= 0.0) throw DomainError("Kerr strengths must be positive");
  std::vector<ScheduleStep> out;
  auto twist = [&](const ModePair& pair, double phi) {
    const double a = positive_angle(phi / 2.0);
    out.push_back({"self-kerr", {pair.first}, a, a / chi});
    out.push_back({"self-kerr", {pair.second}, a, a / chi});
    out.push_back({"phase", {}, -phi, 0.0});  // e^{-i phi n^2/4} at n = 2
  };
  for (const auto& p : seq.pulses()) {
    switch (p.kind()) {
      case PulseKind::Rotation: {
        const ModePair pair = qutrit_modes(p.targets()[0]);
        if (p.axis() == Axis::z) {
          out.push_back({"phase-shifter", {pair.first, pair.second}, p.angle(), 0.0});
        } else {
          out.push_back({std::string("beam-splitter-") + axis_name(p.axis()),
                         {pair.first, pair.second}, p.angle(), 0.0});
        }
        break;
      }
      case PulseKind::Oat: {
        const ModePair pair = qutrit_modes(p.targets()[0]);
        if (p.axis() == Axis::z) {
          twist(pair, p.angle());
        } else {
          const std::string bs =
              std::string("beam-splitter-") + (p.axis() == Axis::y ? 'x' : 'y');
          out.push_back({bs, {pair.first, pair.second}, -kPi / 2.0, 0.0});
          twist(pair, p.angle());
          out.push_back({bs, {pair.first, pair.second}, kPi / 2.0, 0.0});
        }
        break;
      }
      case PulseKind::TwoBodyZZ:
        for (const auto& s : cross_kerr_schedule(p.angle(), p.targets()[0], p.targets()[1])) {
          out.push_back({"cross-kerr", {s.mode_a, s.mode_b}, s.angle, s.angle / chi_cross});
        }
        break;
      case PulseKind::GlobalPhase:
        out.push_back({"phase", {}, p.angle(), 0.0});
        break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Fock state text table: one row `re im n_1 ... n_k` per nonzero amplitude.

inline std::string to_table(const FockState& s, double threshold = 0.0) {
  std::ostringstream os;
  os << "# re im";
  for (int m = 0; m < s.space().modes(); ++m) os << " n" << m;
  os << "\n# modes " << s.space().modes() << " cutoff " << s.space().cutoff() << "\n";
  for (Index i = 0; i < s.space().dim(); ++i) {
    const Complex a = s.amplitudes()(i);
    if (std::abs(a) <= threshold || a == Complex(0.0, 0.0)) continue;
    os << format_real(a.real()) << ' ' << format_real(a.imag());
    for (int n : s.space().occupations(i)) os << ' ' << n;
    os << '\n';
  }
  return os.str();
}

inline FockState parse_table(std::string_view text, const FockSpace& space) {
  Vector v = Vector::Zero(space.dim());
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string w; ls >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    if (static_cast<int>(tok.size()) != space.modes() + 2) {
      throw ParseError("expected " + std::to_string(space.modes() + 2) + " columns", lineno);
    }
    try {
      const double re = std::stod(tok[0]);
      const double im = std::stod(tok[1]);
      std::vector<int> occ;
      for (size_t i = 2; i < tok.size(); ++i) occ.push_back(std::stoi(tok[i]));
      v(space.index(occ)) += Complex(re, im);
    } catch (const Error& e) {
      throw ParseError(e.what(), lineno);
    } catch (const std::exception&) {
      throw ParseError("bad number", lineno);
    }
  }
  return FockState(space, std::move(v));
}

// ---------------------------------------------------------------------------
// Sector-equivalence sweep.

/// Balanced beam splitter R(x, pi/2) on |1,1>.
inline FockState hom_state(int cutoff = kDefaultCutoff) {
  const FockSpace space(2, cutoff);
  return beam_splitter(kPi / 2.0, Axis::x, {0, 1}, space).apply(FockState::basis(space, {1, 1}));
}

/// Diagonal of N_a N_b over the pair states with n_a + n_b = n, n_a descending.
inline std::vector<double> pi0_sector_eigenvalues(int n, int cutoff = kDefaultCutoff) {
  if (n < 0 || n > cutoff) throw RangeError("photon number outside the truncation");
  const FockSpace space(2, cutoff);
  const FockOperator p = projector_pi0({0, 1}, space);
  std::vector<double> out;
  for (int na = n; na >= 0; --na) {
    const Index i = space.index({na, n - na});
    out.push_back(p.matrix()(i, i).real());
  }
  return out;
}

struct FockCheck {
  std::string name;
  bool pass = false;
  double residual = 0.0;
  Complex phase{0.0, 0.0};
  double leakage = 0.0;
  std::string notes;
};

/// Fock realizations restricted to the encoded sector against the spin and
/// catalogue matrices, at each cutoff, plus the n = 2 caveat and the
/// beam-splitter bunching check.
inline std::vector<FockCheck> verify_fock(double tol = kComposedTol,
                                          const std::vector<double>& cr_angles = default_cr_samples(),
                                          const std::vector<int>& cutoffs = {2, 3, 4}) {
  std::vector<FockCheck> out;
  auto tag = [](const std::string& name, int c) { return "fock:" + name + "@c" + std::to_string(c); };

  // Compares against the cutoff-independent reference taken at the first cutoff.
  struct Reference {
    bool set = false;
    Matrix m;
  };
  auto judge = [&](FockCheck& item, const Matrix& expected, const Matrix& restricted,
                   double leakage, Reference& ref, bool up_to_phase) {
    item.leakage = leakage;
    bool equal = false;
    if (up_to_phase) {
      const auto r = equal_up_to_phase(expected, restricted, tol);
      equal = r.equal_up_to_phase;
      item.residual = r.max_residual;
      item.phase = r.phase;
    } else {
      item.residual = max_abs_diff(expected, restricted);
      item.phase = 1.0;
      equal = item.residual <= tol;
    }
    bool same = true;
    if (!ref.set) {
      ref = {true, restricted};
    } else {
      same = restricted == ref.m;
      item.notes = same ? "bit-identical across cutoffs" : "sector result depends on cutoff";
    }
    item.pass = equal && leakage <= tol && same;
  };

  for (const GateId& id : catalogue(cr_angles)) {
    const int arity = gate_arity(id.kind);
    const std::vector<int> targets = arity == 1 ? std::vector<int>{0} : std::vector<int>{0, 1};
    const PulseSequence seq = compile(id, targets, arity);
    Reference ref;
    for (int c : cutoffs) {
      FockCheck item;
      item.name = tag(gate_name(id), c);
      const SectorResult r = FockCircuit(seq, c).sector_action();
      judge(item, gate(id).matrix(), r.restricted, r.leakage, ref, true);
      out.push_back(std::move(item));
    }
  }

  auto primitive = [&](const std::string& name, auto build, const Matrix& expected,
                       int qutrits, bool up_to_phase) {
    Reference ref;
    const SectorEmbedding emb(qutrits);
    for (int c : cutoffs) {
      const FockSpace space(2 * qutrits, c);
      const FockOperator op = build(space);
      const double leak = sector_leakage(op, emb);
      const Matrix restricted = sector_restrict(op, emb, BasisConvention::computational(),
                                                std::numeric_limits<double>::infinity());
      FockCheck item;
      item.name = tag(name, c);
      judge(item, expected, restricted, leak, ref, up_to_phase);
      out.push_back(std::move(item));
    }
  };

  const ModePair pair{0, 1};
  for (Axis a : kAxes) {
    const double theta = kPi / 3.0;
    primitive(std::string("rotation(") + axis_name(a) + ",pi/3)",
              [&](const FockSpace& s) {
                return a == Axis::z ? phase_shifter(theta, pair, s)
                                    : beam_splitter(theta, a, pair, s);
              },
              to_computational(rotation(a, theta).matrix()), 1, true);
  }
  for (Axis a : kAxes) {
    for (double phi : {kPi / 2.0, 2.0 * kPi / 3.0, -0.9}) {
      primitive(std::string("OAT-self-Kerr(") + axis_name(a) + "," + format_real(phi) + ")",
                [&](const FockSpace& s) { return oat_fock(a, phi, pair, 2, s); },
                to_computational(oat(a, phi).matrix()), 1, true);
    }
  }
  {
    Matrix p0 = Matrix::Zero(3, 3);
    p0(0, 0) = 1.0;
    primitive("Pi0=NaNb", [&](const FockSpace& s) { return projector_pi0(pair, s); }, p0, 1,
              false);
  }
  primitive("CZ-cross-Kerr", [&](const FockSpace& s) { return cz_via_cross_kerr(0, 1, s); },
            gate(GateKind::CZ).matrix(), 2, true);
  for (double phi : cr_angles) {
    primitive("ZZ-cross-Kerr(" + format_real(phi) + ")",
              [&](const FockSpace& s) { return two_body_zz_via_cross_kerr(phi, 0, 1, s); },
              gate(GateId::cr_z(phi)).matrix(), 2, true);
  }

  {
    FockCheck item;
    item.name = "fock:Pi0 n=3 not a projector";
    const int c = std::max(3, cutoffs.empty() ? 3 : cutoffs.back());
    const auto ev = pi0_sector_eigenvalues(3, c);
    bool has_two = false;
    std::string list;
    for (double e : ev) {
      has_two = has_two || std::abs(e - 2.0) <= kExactTol;
      list += (list.empty() ? "" : ", ") + format_real(e);
    }
    item.pass = has_two;
    item.phase = 1.0;
    item.notes = "eigenvalues on n=3: " + list;
    out.push_back(std::move(item));
  }
  {
    FockCheck item;
    item.name = "fock:HOM";
    const double t = std::min(tol, kExactTol);
    const FockState s = hom_state(kDefaultCutoff);
    const Complex a20 = s.amplitude({2, 0});
    const Complex a02 = s.amplitude({0, 2});
    const Index i20 = s.space().index({2, 0});
    const Index i02 = s.space().index({0, 2});
    double rest2 = 0.0;
    for (Index i = 0; i < s.space().dim(); ++i) {
      if (i != i20 && i != i02) rest2 += std::norm(s.amplitudes()(i));
    }
    const double rest = std::sqrt(rest2);
    const double r = 1.0 / std::sqrt(2.0);
    item.residual = std::max({std::abs(std::abs(a20) - r), std::abs(std::abs(a02) - r), rest});
    item.leakage = rest;
    item.phase = a02 / a20;
    item.pass = item.residual <= t;
    item.notes = "amp(0,2)/amp(2,0) = " + format_real(item.phase.real()) + " " +
                 format_real(item.phase.imag()) + "i; reference convention has -1";
    out.push_back(std::move(item));
  }
  return out;
}

}  // namespace qpf
