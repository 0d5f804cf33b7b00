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

#include <optional>

#include "ursa/rng.hpp"
#include "ursa/state.hpp"

namespace ursa {

/// X (x) Y on system (x) apparatus, system-major index convention.
Matrix kron(const Eigen::Ref<const Matrix>& x, const Eigen::Ref<const Matrix>& y);

/// Partial trace over the apparatus factor of a (dim_sys * dim_app)-square
/// joint operator.
Matrix partial_trace_apparatus(const Eigen::Ref<const Matrix>& joint,
                               int dim_sys, int dim_app);

/// An indirect-measurement model: system state rho, apparatus state rho_app,
/// joint interaction unitary U on system (x) apparatus, system observables
/// A and B, and commuting meter observables A_app, B_app read out on the
/// apparatus after the interaction.
class MeasurementModel {
 public:
  MeasurementModel(DensityMatrix rho, DensityMatrix rho_app, Matrix u,
                   HermitianObservable a, HermitianObservable b,
                   HermitianObservable a_app, HermitianObservable b_app,
                   const Tolerances& tol = default_tolerances());

  const DensityMatrix& rho() const { return rho_; }
  const DensityMatrix& rho_app() const { return rho_app_; }
  const Matrix& unitary() const { return u_; }
  const HermitianObservable& a() const { return a_; }
  const HermitianObservable& b() const { return b_; }
  const HermitianObservable& a_app() const { return a_app_; }
  const HermitianObservable& b_app() const { return b_app_; }

  int dim_system() const { return rho_.dim(); }
  int dim_apparatus() const { return rho_app_.dim(); }
  int dim_joint() const { return rho_.dim() * rho_app_.dim(); }

 private:
  DensityMatrix rho_;
  DensityMatrix rho_app_;
  Matrix u_;
  HermitianObservable a_;
  HermitianObservable b_;
  HermitianObservable a_app_;
  HermitianObservable b_app_;
};

/// Selects which system observable / meter pair an operation refers to.
enum class Meter { a, b };

/// N_X = U^dag (I (x) X_app) U - X (x) I, the meter-vs-observable mismatch
/// on the joint space.
HermitianObservable noise_operator(const MeasurementModel& m, Meter which,
                                   const Tolerances& tol = default_tolerances());

/// eps(X) = sqrt(Tr[(rho (x) rho_app) N_X^2]).
double error(const MeasurementModel& m, Meter which,
             const Tolerances& tol = default_tolerances());

/// eta(B) = sqrt(Tr[(rho (x) rho_app) (B_out - B (x) I)^2]) with
/// B_out = U^dag (B (x) I) U, the back-action on B through the interaction.
double disturbance(const MeasurementModel& m,
                   const Tolerances& tol = default_tolerances());

/// ||Tr_app[(I (x) rho_app) U^dag (I (x) X_app) U] - X||_op: how far the
/// meter mean is from reproducing <X> on every system state.
double unbiasedness_defect(const MeasurementModel& m, Meter which,
                           const Tolerances& tol = default_tolerances());

/// (lambda_max mu_max + lambda_min mu_min) /
/// (2 (lambda_max mu_max - lambda_min mu_min)) for system spectrum lambda
/// and apparatus spectrum mu; these products are the extreme eigenvalues of
/// rho (x) rho_app.  Always >= 1/2, returned as exactly 0.5 when
/// lambda_min mu_min = 0.  Returns std::nullopt when the joint state is
/// maximally mixed and the coefficient diverges.
std::optional<double> generalized_coefficient(const Spectrum& system,
                                              const Spectrum& apparatus,
                                              const Tolerances& tol = default_tolerances());

/// One error/error or error/disturbance inequality: LHS against
/// coefficient * |<[A,B]>_rho| for both coefficient variants.
struct InequalityVerdict {
  double lhs = 0.0;
  double rhs_classical = 0.0;
  double rhs_generalized = 0.0;
  bool classical_holds = false;
  bool generalized_holds = false;
};

/// Full evaluation of a measurement model.
///
///   arthurs_goodman  eps(A) eps(B)                               (requires
///                    unbiased meters; the unbiased flag records the gate)
///   ozawa1           eps(A) eps(B) + eps(A) sigma(B) + sigma(A) eps(B)
///   ozawa2           eps(A) eta(B) + eps(A) sigma(B) + sigma(A) eta(B)
struct ErrorDisturbanceReport {
  double eps_a = 0.0;
  double eps_b = 0.0;
  double eta_b = 0.0;
  double sigma_a = 0.0;
  double sigma_b = 0.0;
  /// |<[A,B]>_rho| on the system alone.
  double commutator_term = 0.0;
  double coeff_classical = 0.5;
  /// +infinity when the joint state is maximally mixed (coeff_degenerate).
  double coeff_generalized = 0.5;
  bool coeff_degenerate = false;
  double unbias_defect_a = 0.0;
  double unbias_defect_b = 0.0;
  /// Both defects within the unbiasedness tolerance.
  bool unbiased = false;
  InequalityVerdict arthurs_goodman;
  InequalityVerdict ozawa1;
  InequalityVerdict ozawa2;
};

ErrorDisturbanceReport evaluate(const MeasurementModel& m,
                                const Tolerances& tol = default_tolerances());

/// Random qubit-system/qubit-apparatus model: random states, Haar joint
/// unitary, gaussian system observables, and commuting meters built as two
/// random spectral functions of one random apparatus Hermitian.
MeasurementModel random_qubit_model(SeededRng& rng,
                                    const Tolerances& tol = default_tolerances());

}  // namespace ursa
