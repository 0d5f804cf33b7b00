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

namespace ursa {

/// Numerical tolerances used across the library.
///
/// Every validating constructor and every verdict-producing operation accepts
/// an optional Tolerances argument; the defaults below are the library-wide
/// contract and the only place these constants live.
struct Tolerances {
  /// Relative Hermiticity defect accepted at construction:
  /// ||X - X^dag||_op <= hermiticity * max(1, ||X||_op).  Inputs inside the
  /// tolerance are stored as (X + X^dag)/2, anything worse is rejected.
  double hermiticity = 1e-12;

  /// |Tr(rho) - 1| accepted for density matrices.
  double trace_one = 1e-12;

  /// Density-matrix eigenvalues in [-negative_eigenvalue, 0) are clipped to
  /// zero and the spectrum renormalized; anything below is rejected.
  double negative_eigenvalue = 1e-10;

  /// Per-column residual ||rho v - lambda v|| accepted for a stored
  /// eigendecomposition.
  double eigen_residual = 1e-10;

  /// Relative degeneracy threshold: a spectrum counts as maximally mixed
  /// when lambda_max - lambda_min <= degeneracy * lambda_max.
  double degeneracy = 1e-12;

  /// Relative slack accepted before a relation verdict turns false:
  /// holds <=> lhs - rhs >= -slack * max(1, lhs).
  double slack = 1e-9;

  /// Equality residual accepted for an extremal pair:
  /// |lhs - rhs| <= tightness * max(1, lhs).
  double tightness = 1e-10;

  /// ||U^dag U - I||_op accepted for measurement-model unitaries.
  double unitarity = 1e-10;

  /// ||[A_app, B_app]||_op accepted for meter observables.
  double meter_commutation = 1e-10;

  /// Imaginary residue tolerated when a trace that is real by symmetry is
  /// reduced to a double (scaled by the operand norms).
  double imaginary_residue = 1e-12;

  /// Unbiasedness defect below which the joint error-error verdicts are
  /// theorem-grade.
  double unbiasedness = 1e-9;

  /// Coefficient magnitude above which reports carry a conditioning flag.
  double coefficient_flag = 1e12;

  /// Ratio-search proposals with |<[A,B]>|^2 below this threshold (relative
  /// to the product of the squared state norms) are assigned ratio +inf.
  double commutator_degeneracy = 1e-14;
};

/// Library-wide default tolerances.
inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace ursa
