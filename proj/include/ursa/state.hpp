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

#include <algorithm>
#include <cmath>

#include "ursa/linalg.hpp"

namespace ursa {

/// An ascending, non-negative eigenvalue list.
class Spectrum {
 public:
  /// Requires ascending order and entries >= -1e-12; negatives inside that
  /// slack are clamped to zero.
  explicit Spectrum(RealVector values);

  int dim() const { return static_cast<int>(values_.size()); }
  const RealVector& values() const { return values_; }

  double lambda_min() const { return values_[0]; }
  /// Second-smallest eigenvalue; coincides with lambda_min when dim == 1.
  double lambda_smin() const { return values_[values_.size() > 1 ? 1 : 0]; }
  double lambda_max() const { return values_[values_.size() - 1]; }
  double sum() const { return values_.sum(); }

  /// lambda_max - lambda_min <= degeneracy * lambda_max.
  bool maximally_mixed(const Tolerances& tol = default_tolerances()) const {
    return lambda_max() - lambda_min() <= tol.degeneracy * lambda_max();
  }

  /// lambda_min bounded away from zero (relative to lambda_max).
  bool faithful(const Tolerances& tol = default_tolerances()) const {
    return lambda_min() > tol.degeneracy * lambda_max();
  }

 private:
  RealVector values_;
};

/// A validated Hermitian operator.  The stored matrix is exactly
/// (X + X^dag)/2 of the input; inputs whose Hermiticity defect exceeds the
/// tolerance are rejected.
class HermitianObservable {
 public:
  explicit HermitianObservable(const Matrix& m,
                               const Tolerances& tol = default_tolerances());

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }

 private:
  Matrix matrix_;
};

/// A validated density matrix with a cached eigendecomposition.
///
/// Construction symmetrizes, checks the unit trace, diagonalizes, clips
/// eigenvalues in [-negative_eigenvalue, 0) to zero (renormalizing the
/// spectrum and rebuilding the matrix when that happens), and verifies the
/// per-column eigenvector residual.  After construction the stored spectrum
/// is ascending, non-negative and sums to one within 1e-12.
class DensityMatrix {
 public:
  explicit DensityMatrix(const Matrix& m,
                         const Tolerances& tol = default_tolerances());

  /// I/d, with an exact spectrum and the canonical basis as eigenvectors.
  static DensityMatrix maximally_mixed(int dim);

  int dim() const { return static_cast<int>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }
  const Spectrum& spectrum() const { return spectrum_; }
  /// Eigenvector columns, ordered with the ascending spectrum.
  const Matrix& eigenvectors() const { return eigenvectors_; }
  /// Tr(rho^2).
  double purity() const { return spectrum_.values().squaredNorm(); }

 private:
  DensityMatrix() : spectrum_(RealVector::Ones(1)) {}

  Matrix matrix_;
  Matrix eigenvectors_;
  Spectrum spectrum_;
};

/// <X>_rho = Tr(X rho).  The trace is real by symmetry; its imaginary
/// residue is checked against the tolerance and dropped.
double expectation(const HermitianObservable& x, const DensityMatrix& rho,
                   const Tolerances& tol = default_tolerances());

/// ||X||_rho^2 = Tr(rho X^dag X), the squared state-weighted norm.  Defined
/// for arbitrary (not necessarily Hermitian) X; the result is clamped to be
/// non-negative.
template <typename D>
double rho_norm_sq(const Eigen::MatrixBase<D>& x, const DensityMatrix& rho,
                   const Tolerances& tol = default_tolerances()) {
  detail::require_square(x, "rho_norm_sq");
  if (x.rows() != rho.dim()) {
    throw DimMismatchError("rho_norm_sq: operator and state dimensions differ");
  }
  // Tr(rho X^dag X) = Tr(X rho X^dag) = sum_{ij} (X rho)_ij conj(X_ij).
  const Complex t =
      (x.derived() * rho.matrix()).cwiseProduct(x.derived().conjugate()).sum();
  const double scale = std::max(1.0, x.derived().squaredNorm());
  if (std::abs(t.imag()) > tol.imaginary_residue * scale) {
    throw Error("rho_norm_sq: trace has a non-real residue");
  }
  return std::max(0.0, t.real());
}

/// V_rho(X) = ||X - <X> I||_rho^2 = <X^2> - <X>^2, clamped to >= 0.
double variance(const HermitianObservable& x, const DensityMatrix& rho,
                const Tolerances& tol = default_tolerances());

/// Cov_rho(A, B) = <{A, B}>/2 - <A><B>.  Symmetric in (A, B).
double covariance(const HermitianObservable& a, const HermitianObservable& b,
                  const DensityMatrix& rho,
                  const Tolerances& tol = default_tolerances());

/// [A, B] for validated observables; the result is checked to be
/// anti-Hermitian.
Matrix commutator(const HermitianObservable& a, const HermitianObservable& b,
                  const Tolerances& tol = default_tolerances());

/// {A, B} for validated observables; the result is checked to be Hermitian.
Matrix anticommutator(const HermitianObservable& a,
                      const HermitianObservable& b,
                      const Tolerances& tol = default_tolerances());

}  // namespace ursa
