#pragma once

#include <Eigen/Dense>

#include "qhad/qmatrix.hpp"

namespace qhad {

using ComplexMatrix = Eigen::MatrixXcd;
using RealMatrix = Eigen::MatrixXd;

/// Writes A = A0 + A1·j (A0, A1 complex) and returns the 2n×2n block matrix
/// [[A0, A1], [-conj(A1), conj(A0)]].
ComplexMatrix complex_adjoint(const QMatrix& a);

/// Writes A = A0 + A1·i + A2·j + A3·k and returns the 4n×4n real block matrix
///   [ A0  A1 -A2  A3 ]
///   [ A1 -A0 -A3 -A2 ]
///   [ A2 -A3  A0  A1 ]
///   [ A3  A2  A1 -A0 ]
RealMatrix real_adjoint(const QMatrix& a);

/// Unimodular entries and M M* = N·I, both within tol.
bool is_complex_hadamard(const ComplexMatrix& m, double tol = kDefaultTol);
/// ±1 entries and M Mᵀ = N·I, both within tol.
bool is_real_hadamard(const RealMatrix& m, double tol = kDefaultTol);

/// Literal block-pattern test against the complex adjoint form. Throws
/// std::invalid_argument for a non-square or odd-order input.
bool compliance_check_complex(const ComplexMatrix& m, double tol = kDefaultTol);
/// Literal block-pattern test against the real adjoint form. Throws
/// std::invalid_argument for a non-square input or order not divisible by 4.
bool compliance_check_real(const RealMatrix& m, double tol = kDefaultTol);

/// Rebuilds A from a compliant complex Hadamard matrix of order 2n and returns
/// A/sqrt(2), a quaternionic Hadamard matrix of order n. Throws
/// std::invalid_argument if `m` is not Hadamard or not compliant.
QMatrix lift_from_complex(const ComplexMatrix& m, double tol = kDefaultTol);

/// Rebuilds A from the first block row of a compliant real Hadamard matrix of
/// order 4n and returns A/2. Throws std::invalid_argument if `m` is not
/// Hadamard or not compliant.
QMatrix lift_from_real(const RealMatrix& m, double tol = kDefaultTol);

}  // namespace qhad
