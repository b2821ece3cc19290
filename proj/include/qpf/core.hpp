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

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace qpf {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Index = Eigen::Index;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;
inline constexpr Complex kI{0.0, 1.0};

/// Entrywise tolerance for exact 3x3 identities.
inline constexpr double kExactTol = 1e-12;
/// Default tolerance for composed products (9x9 and larger).
inline constexpr double kComposedTol = 1e-10;

/// e^{i theta}
inline Complex cis(double theta) { return std::polar(1.0, theta); }

/// Primitive cube root of unity, e^{2 pi i / 3}.
inline Complex omega() { return cis(kTwoPi / 3.0); }

// ---------------------------------------------------------------------------
// Errors. Every failure mode the library reports derives from qpf::Error.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Non-finite angle or otherwise invalid numeric input.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Dimension mismatch or a dimension that is not a power of three.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Unknown gate name.
class CatalogueError : public Error {
 public:
  using Error::Error;
};

/// Wrong number of targets / modes for an operation.
class ArityError : public Error {
 public:
  using Error::Error;
};

/// Input violates a type invariant (non-unitary, bad multiplicity, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Register exceeds the dense simulation cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Index outside its valid range.
class RangeError : public Error {
 public:
  using Error::Error;
};

/// Operator does not preserve the encoded sector.
class LeakageError : public Error {
 public:
  LeakageError(const std::string& what, double leakage)
      : Error(what), leakage_(leakage) {}
  double leakage() const { return leakage_; }

 private:
  double leakage_;
};

/// Input text could not be parsed. Line numbers are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Input has a form the operation does not handle.
class UnsupportedFormError : public Error {
 public:
  using Error::Error;
};

inline void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw DomainError(std::string(what) + " must be finite");
  }
}

// ---------------------------------------------------------------------------
// Dense helpers.

/// max_{ij} |a_ij - b_ij|; throws ShapeError on mismatch.
inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("matrix shapes differ: " + std::to_string(a.rows()) + "x" +
                     std::to_string(a.cols()) + " vs " +
                     std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

inline double unitarity_defect(const Matrix& u) {
  if (u.rows() != u.cols()) throw ShapeError("matrix is not square");
  return max_abs_diff(u.adjoint() * u, Matrix::Identity(u.rows(), u.cols()));
}

inline double hermiticity_defect(const Matrix& h) {
  if (h.rows() != h.cols()) throw ShapeError("matrix is not square");
  return max_abs_diff(h, h.adjoint());
}

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Index i = 0; i < a.rows(); ++i) {
    for (Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

inline Vector kron(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i) {
    out.segment(i * b.size(), b.size()) = a(i) * b;
  }
  return out;
}

/// Number of qutrits k with 3^k == dim, or -1.
inline int qutrit_count(Index dim) {
  int k = 0;
  Index d = 1;
  while (d < dim) {
    d *= 3;
    ++k;
  }
  return d == dim && dim > 0 ? k : -1;
}

inline Index pow3(int k) {
  Index d = 1;
  for (int i = 0; i < k; ++i) d *= 3;
  return d;
}

// ---------------------------------------------------------------------------
// Strong matrix types. Both validate on construction and are immutable.

class UnitaryMatrix {
 public:
  explicit UnitaryMatrix(Matrix m, double tol = kComposedTol)
      : m_(std::move(m)) {
    const double defect = unitarity_defect(m_);
    if (!(defect <= tol)) {
      throw ValidationError("matrix is not unitary (max |U^dagger U - I| = " +
                            std::to_string(defect) + ")");
    }
  }

  static UnitaryMatrix identity(Index dim) {
    return UnitaryMatrix(Matrix::Identity(dim, dim));
  }

  const Matrix& matrix() const { return m_; }
  operator const Matrix&() const { return m_; }  // NOLINT
  Index dim() const { return m_.rows(); }
  Complex operator()(Index i, Index j) const { return m_(i, j); }

  UnitaryMatrix adjoint() const { return UnitaryMatrix(m_.adjoint()); }

  friend UnitaryMatrix operator*(const UnitaryMatrix& a, const UnitaryMatrix& b) {
    return UnitaryMatrix(a.m_ * b.m_);
  }

 private:
  Matrix m_;
};

class HermitianOperator {
 public:
  explicit HermitianOperator(Matrix m, double tol = kExactTol) : m_(std::move(m)) {
    const double defect = hermiticity_defect(m_);
    if (!(defect <= tol)) {
      throw ValidationError("matrix is not hermitian (max |H - H^dagger| = " +
                            std::to_string(defect) + ")");
    }
  }

  const Matrix& matrix() const { return m_; }
  operator const Matrix&() const { return m_; }  // NOLINT
  Index dim() const { return m_.rows(); }
  Complex operator()(Index i, Index j) const { return m_(i, j); }

 private:
  Matrix m_;
};

}  // namespace qpf
