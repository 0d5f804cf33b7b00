// Copyright 2026 The ursa developers.
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

#include <Eigen/Dense>

#include "ursa/errors.hpp"
#include "ursa/tolerances.hpp"
#include "ursa/types.hpp"

namespace ursa {

namespace detail {

template <typename D>
void require_square(const Eigen::MatrixBase<D>& x, const char* who) {
  if (x.rows() != x.cols()) {
    throw DimMismatchError(std::string(who) + ": matrix is not square");
  }
}

template <typename DX, typename DY>
void require_same_dim(const Eigen::MatrixBase<DX>& x,
                      const Eigen::MatrixBase<DY>& y, const char* who) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) {
    throw DimMismatchError(std::string(who) + ": operand dimensions differ");
  }
}

}  // namespace detail

/// Tr(X Y) for square operands of equal dimension, computed without forming
/// the product: Tr(X Y) = sum_{ij} X_ij Y_ji.
template <typename DX, typename DY>
Complex trace_product(const Eigen::MatrixBase<DX>& x,
                      const Eigen::MatrixBase<DY>& y) {
  detail::require_square(x, "trace_product");
  detail::require_square(y, "trace_product");
  detail::require_same_dim(x, y, "trace_product");
  return x.derived().cwiseProduct(y.derived().transpose()).sum();
}

/// [X, Y] = XY - YX.
template <typename DX, typename DY>
Matrix commutator(const Eigen::MatrixBase<DX>& x,
                  const Eigen::MatrixBase<DY>& y) {
  detail::require_square(x, "commutator");
  detail::require_same_dim(x, y, "commutator");
  return x.derived() * y.derived() - y.derived() * x.derived();
}

/// {X, Y} = XY + YX.
template <typename DX, typename DY>
Matrix anticommutator(const Eigen::MatrixBase<DX>& x,
                      const Eigen::MatrixBase<DY>& y) {
  detail::require_square(x, "anticommutator");
  detail::require_same_dim(x, y, "anticommutator");
  return x.derived() * y.derived() + y.derived() * x.derived();
}

/// Largest singular value.  For Hermitian or anti-Hermitian arguments this
/// equals the largest absolute eigenvalue.
double operator_norm(const Eigen::Ref<const Matrix>& x);

/// ||X - X^dag||_op, the distance from the Hermitian cone.
double hermiticity_defect(const Eigen::Ref<const Matrix>& x);

/// Eigenvalues (ascending) and matching orthonormal eigenvector columns of a
/// Hermitian matrix.
struct EigenSystem {
  RealVector eigenvalues;
  Matrix eigenvectors;
};

enum class EigenSolverKind {
  /// Eigen's SelfAdjointEigenSolver.
  platform,
  /// Cyclic complex Jacobi sweeps; slower, dependency-free reference path.
  jacobi,
};

/// Diagonalizes a Hermitian matrix.  Only the Hermitian part of the argument
/// is meaningful; the caller is expected to pass an (at least numerically)
/// Hermitian operand.  Throws NonConvergenceError if the selected backend
/// fails to converge.
EigenSystem hermitian_eigen(const Eigen::Ref<const Matrix>& h,
                            EigenSolverKind kind = EigenSolverKind::platform);

/// Cyclic complex Jacobi diagonalization.  max_sweeps = 0 selects the
/// default cap of 100 * d^2 sweeps.
EigenSystem jacobi_hermitian_eigen(const Eigen::Ref<const Matrix>& h,
                                   long max_sweeps = 0);

}  // namespace ursa
