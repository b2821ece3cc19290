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

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qpf/qutrit_gates.hpp"
#include "qpf/spin_algebra.hpp"

namespace qpf {
namespace {

constexpr double kTol = kExactTol;

bool is_omega_power(Complex c) {
  for (int k = 0; k < 3; ++k) {
    if (std::abs(c - omega_pow(k)) <= 1e-12) return true;
  }
  return false;
}

TEST(Gate, ZMatchesDefinition) {
  EXPECT_LE(max_abs_diff(gate(GateKind::Z).matrix(), oracle::Z()), kTol);
}

TEST(Gate, TMatchesDefinition) {
  EXPECT_LE(max_abs_diff(gate(GateKind::T).matrix(), oracle::T()), kTol);
}

TEST(Gate, FIsUnitaryVandermonde) {
  const Matrix f = gate(GateKind::F).matrix();
  EXPECT_LE(max_abs_diff(f, oracle::F()), kTol);
  EXPECT_LE(max_abs_diff(f * f.adjoint(), Matrix::Identity(3, 3)), kTol);
}

TEST(Gate, PermutationsMatchDefinition) {
  EXPECT_LE(max_abs_diff(gate(GateKind::X).matrix(), oracle::X()), kTol);
  EXPECT_LE(max_abs_diff(gate(GateKind::X01).matrix(), oracle::perm(1, 0, 2)), kTol);
  EXPECT_LE(max_abs_diff(gate(GateKind::X02).matrix(), oracle::perm(2, 1, 0)), kTol);
  EXPECT_LE(max_abs_diff(gate(GateKind::X12).matrix(), oracle::perm(0, 2, 1)), kTol);
}

TEST(Gate, TwoQutritMatchesControlledOracle) {
  EXPECT_LE(max_abs_diff(gate(GateKind::CZ).matrix(), oracle::controlled(oracle::Z())), kTol);
  EXPECT_LE(max_abs_diff(gate(GateKind::CX).matrix(), oracle::controlled(oracle::X())), kTol);
}

TEST(Gate, AllCatalogueGatesUnitary) {
  for (const GateId& id : catalogue({0.3, kTwoPi / 3.0, -2.0})) {
    EXPECT_LE(unitarity_defect(gate(id).matrix()), kTol) << gate_name(id);
    EXPECT_EQ(gate(id).dim(), gate_arity(id.kind) == 2 ? 9 : 3);
  }
}

TEST(Gate, ShearDiagonals) {
  // omega^{xi q^2 / 2} with 1/2 = 2 mod 3.
  Matrix s110 = Matrix::Zero(3, 3);
  Matrix s120 = Matrix::Zero(3, 3);
  for (int q = 0; q < 3; ++q) {
    s110(q, q) = oracle::w(2 * q * q);
    s120(q, q) = oracle::w(4 * q * q);
  }
  EXPECT_LE(max_abs_diff(gate(GateKind::S110).matrix(), s110), kTol);
  EXPECT_LE(max_abs_diff(gate(GateKind::S120).matrix(), s120), kTol);
}

TEST(Gate, SheargatesMatchOatExponentials) {
  const auto a = equal_up_to_phase(gate(GateKind::S110).matrix(),
                                   to_computational(oat(Axis::z, 4.0 * kPi / 3.0).matrix()), kTol);
  EXPECT_TRUE(a.equal_up_to_phase);
  EXPECT_LE(std::abs(a.phase - Complex(1.0)), kTol);
  const auto b = equal_up_to_phase(gate(GateKind::S120).matrix(),
                                   to_computational(oat(Axis::z, kTwoPi / 3.0).matrix()), kTol);
  EXPECT_TRUE(b.equal_up_to_phase);
  EXPECT_LE(std::abs(b.phase - Complex(1.0)), kTol);
}

TEST(Gate, MomentumShearsMatchThetaExponentials) {
  const Matrix t = to_computational(theta_z_direct().matrix());
  const Matrix t2 = t * t;
  const Matrix e1 = oracle::expi_hermitian(t2, kTwoPi / 3.0);
  const Matrix e2 = oracle::expi_hermitian(t2, 4.0 * kPi / 3.0);
  const auto a = equal_up_to_phase(gate(GateKind::S101).matrix(), e1, kTol);
  EXPECT_TRUE(a.equal_up_to_phase) << a.max_residual;
  EXPECT_LE(std::abs(a.phase - Complex(1.0)), kTol);
  const auto b = equal_up_to_phase(gate(GateKind::S102).matrix(), e2, kTol);
  EXPECT_TRUE(b.equal_up_to_phase) << b.max_residual;
  EXPECT_LE(std::abs(b.phase - Complex(1.0)), kTol);
}

TEST(Gate, UnknownNameThrows) {
  EXPECT_THROW(parse_gate("BOGUS"), CatalogueError);
  EXPECT_THROW(parse_gate("CR(z,pi"), CatalogueError);
  EXPECT_THROW(parse_gate("CR(z,foo)"), CatalogueError);
}

TEST(Gate, NamesRoundTrip) {
  for (const GateId& id : catalogue({0.25})) {
    EXPECT_EQ(parse_gate(gate_name(id)), id) << gate_name(id);
  }
  EXPECT_EQ(parse_gate("S(2,0,0)").kind, GateKind::X12);
  EXPECT_EQ(parse_gate("S101").kind, GateKind::S101);
  EXPECT_NEAR(*parse_gate("CR(z,2pi/3)").param, kTwoPi / 3.0, 1e-15);
}

TEST(Gate, CrZAtTwoPiOverThreeIsCz) {
  EXPECT_LE(max_abs_diff(gate(GateId::cr_z(kTwoPi / 3.0)).matrix(), gate(GateKind::CZ).matrix()),
            kTol);
}

TEST(MomentumState, Plus) {
  Vector want = Vector::Constant(3, 1.0 / std::sqrt(3.0));
  EXPECT_LE((momentum_state(0) - want).cwiseAbs().maxCoeff(), kTol);
}

TEST(MomentumState, Omega) {
  Vector want(3);
  want << 1.0, omega(), omega() * omega();
  want /= std::sqrt(3.0);
  EXPECT_LE((momentum_state(1) - want).cwiseAbs().maxCoeff(), kTol);
}

TEST(MomentumState, Orthonormal) {
  for (int q = 0; q < 3; ++q) {
    for (int r = 0; r < 3; ++r) {
      const Complex ip = momentum_state(q).dot(momentum_state(r));
      EXPECT_LE(std::abs(ip - Complex(q == r ? 1.0 : 0.0)), kTol);
    }
  }
  EXPECT_THROW(momentum_state(3), RangeError);
  EXPECT_THROW(basis_state(-1), RangeError);
}

TEST(Controlled, ZIsCz) {
  Matrix want = Matrix::Zero(9, 9);
  const Complex w = omega();
  const Complex d[9] = {1, 1, 1, 1, w, w * w, 1, w * w, w};
  for (int i = 0; i < 9; ++i) want(i, i) = d[i];
  EXPECT_LE(max_abs_diff(controlled(gate(GateKind::Z).matrix()).matrix(), want), kTol);
}

TEST(Controlled, IdentityIsIdentity) {
  EXPECT_LE(max_abs_diff(controlled(Matrix::Identity(3, 3)).matrix(), Matrix::Identity(9, 9)),
            kTol);
}

TEST(Controlled, XShiftsTargetWhenControlIsOne) {
  const Matrix cx = controlled(gate(GateKind::X).matrix()).matrix();
  for (int q = 0; q < 3; ++q) {
    const Vector out = cx * kron(basis_state(1), basis_state(q));
    const Vector want = kron(basis_state(1), basis_state((q + 1) % 3));
    EXPECT_LE((out - want).cwiseAbs().maxCoeff(), kTol);
  }
}

TEST(Controlled, RejectsNonUnitary) {
  Matrix m = Matrix::Identity(3, 3);
  m(1, 1) = 0.5;
  EXPECT_THROW(controlled(m), ValidationError);
  EXPECT_THROW(controlled(Matrix::Identity(2, 2)), ShapeError);
}

TEST(PauliProduct, ZeroZeroIsIdentity) {
  EXPECT_LE(max_abs_diff(pauli_product(0, 0).matrix(), Matrix::Identity(3, 3)), kTol);
}

TEST(PauliProduct, OneOneAction) {
  for (int q = 0; q < 3; ++q) {
    const Vector out = pauli_product(1, 1).matrix() * basis_state(q);
    const Vector want = omega_pow(q) * basis_state((q + 1) % 3);
    EXPECT_LE((out - want).cwiseAbs().maxCoeff(), kTol);
  }
}

TEST(PauliProduct, GroupClosure) {
  for (int j1 = 0; j1 < 3; ++j1) {
    for (int k1 = 0; k1 < 3; ++k1) {
      for (int j2 = 0; j2 < 3; ++j2) {
        for (int k2 = 0; k2 < 3; ++k2) {
          const Matrix p = pauli_product(j1, k1).matrix() * pauli_product(j2, k2).matrix();
          const auto m = match_pauli(p, kTol);
          ASSERT_TRUE(m.has_value());
          EXPECT_EQ(m->x_power, (j1 + j2) % 3);
          EXPECT_TRUE(is_omega_power(m->phase));
        }
      }
    }
  }
}

TEST(EqualUpToPhase, ExactPhaseMultiple) {
  const Matrix z = gate(GateKind::Z).matrix();
  const auto r = equal_up_to_phase(z, cis(0.7) * z, kTol);
  EXPECT_TRUE(r.equal_up_to_phase);
  EXPECT_LE(std::abs(r.phase - cis(0.7)), kTol);
  EXPECT_NEAR(std::abs(r.phase), 1.0, 1e-12);
}

TEST(EqualUpToPhase, RxPiVersusX12HasPhaseMinusOne) {
  const auto r = equal_up_to_phase(gate(GateKind::X12).matrix(),
                                   to_computational(rotation(Axis::x, kPi).matrix()), kTol);
  EXPECT_TRUE(r.equal_up_to_phase);
  EXPECT_LE(std::abs(r.phase - Complex(-1.0)), kTol);
}

TEST(EqualUpToPhase, ZAndXDiffer) {
  const auto r = equal_up_to_phase(gate(GateKind::Z).matrix(), gate(GateKind::X).matrix());
  EXPECT_FALSE(r.equal_up_to_phase);
  EXPECT_FALSE(r.phase_defined);
}

TEST(EqualUpToPhase, DimensionMismatchThrows) {
  EXPECT_THROW(equal_up_to_phase(Matrix::Identity(3, 3), Matrix::Identity(9, 9)), ShapeError);
}

TEST(CliffordCheck, FourierMapsZToXDagger) {
  const auto r = clifford_conjugation_check(gate(GateKind::F).matrix(), gate(GateKind::Z).matrix());
  ASSERT_TRUE(r.maps_to_pauli);
  // With the Vandermonde F, F Z F^dagger lands on X^2 = X^dagger.
  EXPECT_EQ(r.image->x_power, 2);
  EXPECT_EQ(r.image->z_power, 0);
  const auto inv =
      clifford_conjugation_check(gate(GateKind::F).matrix().adjoint(), gate(GateKind::Z).matrix());
  EXPECT_EQ(inv.image->x_power, 1);
  EXPECT_EQ(inv.image->z_power, 0);
}

TEST(CliffordCheck, TCommutesWithZ) {
  const auto r = clifford_conjugation_check(gate(GateKind::T).matrix(), gate(GateKind::Z).matrix());
  ASSERT_TRUE(r.maps_to_pauli);
  EXPECT_EQ(r.image->x_power, 0);
  EXPECT_EQ(r.image->z_power, 1);
}

TEST(CliffordCheck, TIsNotClifford) {
  EXPECT_FALSE(
      clifford_conjugation_check(gate(GateKind::T).matrix(), gate(GateKind::X).matrix()).maps_to_pauli);
}

TEST(CliffordCheck, RejectsNonPauliProbe) {
  EXPECT_THROW(clifford_conjugation_check(gate(GateKind::F).matrix(), gate(GateKind::T).matrix()),
               ValidationError);
}

TEST(CliffordCheck, EveryLocalCliffordNormalizesPaulis) {
  for (const GateId& id : catalogue()) {
    if (!is_clifford(id.kind) || gate_arity(id.kind) != 1) continue;
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) {
        EXPECT_TRUE(clifford_conjugation_check(gate(id).matrix(), pauli_product(j, k).matrix())
                        .maps_to_pauli)
            << gate_name(id) << " X^" << j << "Z^" << k;
      }
    }
  }
}

TEST(GateIdentities, FourierPowers) {
  const Matrix f = gate(GateKind::F).matrix();
  const Matrix f2 = f * f;
  EXPECT_TRUE(equal_up_to_phase(Matrix::Identity(3, 3), f2 * f2, kTol).equal_up_to_phase);
  for (int q = 0; q < 3; ++q) {
    const Vector out = f2 * basis_state(q);
    EXPECT_LE((out - basis_state((3 - q) % 3)).cwiseAbs().maxCoeff(), kTol);
  }
}

TEST(GateIdentities, ShearPairCancels) {
  EXPECT_TRUE(equal_up_to_phase(Matrix::Identity(3, 3),
                                gate(GateKind::S110).matrix() * gate(GateKind::S120).matrix(), kTol)
                  .equal_up_to_phase);
}

TEST(GateIdentities, TranspositionConjugation) {
  const Matrix x01 = gate(GateKind::X01).matrix();
  EXPECT_LE(max_abs_diff(x01 * gate(GateKind::X12).matrix() * x01, gate(GateKind::X02).matrix()),
            kTol);
}

TEST(GateIdentities, TPowers) {
  const Matrix t = gate(GateKind::T).matrix();
  Matrix t3 = t * t * t;
  Matrix t9 = t3 * t3 * t3;
  EXPECT_TRUE(equal_up_to_phase(Matrix::Identity(3, 3), t9, kTol).equal_up_to_phase);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) EXPECT_LE(std::abs(t3(i, j)), kTol);
    }
    EXPECT_TRUE(is_omega_power(t3(i, i)));
  }
}

}  // namespace
}  // namespace qpf
