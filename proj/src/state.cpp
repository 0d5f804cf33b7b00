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

#include "ursa/state.hpp"

#include <string>

namespace ursa {

Spectrum::Spectrum(RealVector values) : values_(std::move(values)) {
  if (values_.size() == 0) {
    throw ValidationError("Spectrum: empty eigenvalue list");
  }
  if (!values_.allFinite()) {
    throw ValidationError("Spectrum: non-finite eigenvalue");
  }
  for (Eigen::Index i = 0; i + 1 < values_.size(); ++i) {
    if (values_[i + 1] < values_[i]) {
      throw ValidationError("Spectrum: eigenvalues are not ascending");
    }
  }
  if (values_[0] < -1e-12) {
    throw ValidationError("Spectrum: negative eigenvalue");
  }
  for (Eigen::Index i = 0; i < values_.size() && values_[i] < 0.0; ++i) {
    values_[i] = 0.0;
  }
}

HermitianObservable::HermitianObservable(const Matrix& m,
                                         const Tolerances& tol) {
  detail::require_square(m, "HermitianObservable");
  if (m.rows() == 0) {
    throw ValidationError("HermitianObservable: empty matrix");
  }
  if (!m.allFinite()) {
    throw ValidationError("HermitianObservable: non-finite entries");
  }
  const double defect = hermiticity_defect(m);
  const double scale = std::max(1.0, operator_norm(m));
  if (defect > tol.hermiticity * scale) {
    throw ValidationError("HermitianObservable: Hermiticity defect " +
                          std::to_string(defect) + " exceeds tolerance");
  }
  matrix_ = 0.5 * (m + m.adjoint());
}

DensityMatrix::DensityMatrix(const Matrix& m, const Tolerances& tol)
    : spectrum_(RealVector::Ones(1)) {
  detail::require_square(m, "DensityMatrix");
  if (m.rows() == 0) {
    throw ValidationError("DensityMatrix: empty matrix");
  }
  if (!m.allFinite()) {
    throw ValidationError("DensityMatrix: non-finite entries");
  }
  const double defect = hermiticity_defect(m);
  const double scale = std::max(1.0, operator_norm(m));
  if (defect > tol.hermiticity * scale) {
    throw ValidationError("DensityMatrix: Hermiticity defect " +
                          std::to_string(defect) + " exceeds tolerance");
  }
  Matrix h = 0.5 * (m + m.adjoint());
  const double trace = h.trace().real();
  if (std::abs(trace - 1.0) > tol.trace_one) {
    throw ValidationError("DensityMatrix: trace " + std::to_string(trace) +
                          " is not 1");
  }

  EigenSystem es = hermitian_eigen(h);
  RealVector lambda = es.eigenvalues;
  if (lambda[0] < -tol.negative_eigenvalue) {
    throw ValidationError("DensityMatrix: eigenvalue " +
                          std::to_string(lambda[0]) +
                          " below the clip window");
  }
  bool clipped = false;
  for (Eigen::Index i = 0; i < lambda.size() && lambda[i] < 0.0; ++i) {
    lambda[i] = 0.0;
    clipped = true;
  }
  if (clipped) {
    lambda /= lambda.sum();
    h = es.eigenvectors * lambda.asDiagonal() * es.eigenvectors.adjoint();
    h = 0.5 * (h + h.adjoint());
  }

  matrix_ = std::move(h);
  eigenvectors_ = std::move(es.eigenvectors);
  spectrum_ = Spectrum(std::move(lambda));

  for (Eigen::Index i = 0; i < matrix_.rows(); ++i) {
    const double residual = (matrix_ * eigenvectors_.col(i) -
                             spectrum_.values()[i] * eigenvectors_.col(i))
                                .norm();
    if (residual > tol.eigen_residual) {
      throw NonConvergenceError(
          "DensityMatrix: eigenvector residual " + std::to_string(residual) +
          " exceeds tolerance");
    }
  }
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  if (dim < 1) {
    throw RangeError("DensityMatrix::maximally_mixed: dim must be positive");
  }
  DensityMatrix rho;
  rho.matrix_ = Matrix::Identity(dim, dim) / static_cast<double>(dim);
  rho.eigenvectors_ = Matrix::Identity(dim, dim);
  rho.spectrum_ =
      Spectrum(RealVector::Constant(dim, 1.0 / static_cast<double>(dim)));
  return rho;
}

double expectation(const HermitianObservable& x, const DensityMatrix& rho,
                   const Tolerances& tol) {
  if (x.dim() != rho.dim()) {
    throw DimMismatchError("expectation: operator and state dimensions differ");
  }
  const Complex t = trace_product(x.matrix(), rho.matrix());
  const double scale = std::max(1.0, x.matrix().norm());
  if (std::abs(t.imag()) > tol.imaginary_residue * scale) {
    throw Error("expectation: trace has a non-real residue");
  }
  return t.real();
}

double variance(const HermitianObservable& x, const DensityMatrix& rho,
                const Tolerances& tol) {
  const double mean = expectation(x, rho, tol);
  const Matrix centered =
      x.matrix() - mean * Matrix::Identity(x.dim(), x.dim());
  return rho_norm_sq(centered, rho, tol);
}

double covariance(const HermitianObservable& a, const HermitianObservable& b,
                  const DensityMatrix& rho, const Tolerances& tol) {
  if (a.dim() != b.dim() || a.dim() != rho.dim()) {
    throw DimMismatchError("covariance: operand dimensions differ");
  }
  const Complex t =
      trace_product(rho.matrix(), anticommutator(a.matrix(), b.matrix()));
  const double scale = std::max(1.0, a.matrix().norm() * b.matrix().norm());
  if (std::abs(t.imag()) > tol.imaginary_residue * scale) {
    throw Error("covariance: trace has a non-real residue");
  }
  return 0.5 * t.real() -
         expectation(a, rho, tol) * expectation(b, rho, tol);
}

Matrix commutator(const HermitianObservable& a, const HermitianObservable& b,
                  const Tolerances& tol) {
  Matrix c = commutator(a.matrix(), b.matrix());
  const double defect = (c + c.adjoint()).norm();
  if (defect > tol.hermiticity * std::max(1.0, c.norm())) {
    throw Error("commutator: result is not anti-Hermitian");
  }
  return c;
}

Matrix anticommutator(const HermitianObservable& a,
                      const HermitianObservable& b, const Tolerances& tol) {
  Matrix c = anticommutator(a.matrix(), b.matrix());
  const double defect = (c - c.adjoint()).norm();
  if (defect > tol.hermiticity * std::max(1.0, c.norm())) {
    throw Error("anticommutator: result is not Hermitian");
  }
  return c;
}

}  // namespace ursa
