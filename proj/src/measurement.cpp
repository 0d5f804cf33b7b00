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

#include "ursa/measurement.hpp"

#include <cmath>
#include <limits>
#include <utility>

#include "ursa/linalg.hpp"
#include "ursa/sampling.hpp"

namespace ursa {

Matrix kron(const Eigen::Ref<const Matrix>& x,
            const Eigen::Ref<const Matrix>& y) {
  Matrix out(x.rows() * y.rows(), x.cols() * y.cols());
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    }
  }
  return out;
}

Matrix partial_trace_apparatus(const Eigen::Ref<const Matrix>& joint,
                               int dim_sys, int dim_app) {
  if (dim_sys < 1 || dim_app < 1) {
    throw RangeError("partial_trace_apparatus: dimensions must be positive");
  }
  detail::require_square(joint, "partial_trace_apparatus");
  if (joint.rows() != static_cast<Eigen::Index>(dim_sys) * dim_app) {
    throw DimMismatchError(
        "partial_trace_apparatus: joint dimension is not dim_sys * dim_app");
  }
  Matrix out = Matrix::Zero(dim_sys, dim_sys);
  for (int i = 0; i < dim_sys; ++i) {
    for (int j = 0; j < dim_sys; ++j) {
      for (int k = 0; k < dim_app; ++k) {
        out(i, j) += joint(i * dim_app + k, j * dim_app + k);
      }
    }
  }
  return out;
}

MeasurementModel::MeasurementModel(DensityMatrix rho, DensityMatrix rho_app,
                                   Matrix u, HermitianObservable a,
                                   HermitianObservable b,
                                   HermitianObservable a_app,
                                   HermitianObservable b_app,
                                   const Tolerances& tol)
    : rho_(std::move(rho)),
      rho_app_(std::move(rho_app)),
      u_(std::move(u)),
      a_(std::move(a)),
      b_(std::move(b)),
      a_app_(std::move(a_app)),
      b_app_(std::move(b_app)) {
  const int ds = rho_.dim();
  const int da = rho_app_.dim();
  if (a_.dim() != ds || b_.dim() != ds) {
    throw DimMismatchError(
        "MeasurementModel: system observables must match the system state");
  }
  if (a_app_.dim() != da || b_app_.dim() != da) {
    throw DimMismatchError(
        "MeasurementModel: meter observables must match the apparatus state");
  }
  detail::require_square(u_, "MeasurementModel");
  if (u_.rows() != static_cast<Eigen::Index>(ds) * da) {
    throw DimMismatchError(
        "MeasurementModel: unitary must act on system (x) apparatus");
  }
  if (!u_.allFinite()) {
    throw ValidationError("MeasurementModel: unitary has non-finite entries");
  }
  const Matrix defect =
      u_.adjoint() * u_ - Matrix::Identity(u_.rows(), u_.cols());
  if (operator_norm(defect) > tol.unitarity) {
    throw ValidationError("MeasurementModel: interaction is not unitary");
  }
  if (operator_norm(commutator(a_app_.matrix(), b_app_.matrix())) >
      tol.meter_commutation) {
    throw ValidationError("MeasurementModel: meter observables do not commute");
  }
}

HermitianObservable noise_operator(const MeasurementModel& m, Meter which,
                                   const Tolerances& tol) {
  const int ds = m.dim_system();
  const int da = m.dim_apparatus();
  const HermitianObservable& sys = (which == Meter::a) ? m.a() : m.b();
  const HermitianObservable& app = (which == Meter::a) ? m.a_app() : m.b_app();
  const Matrix meter_out =
      m.unitary().adjoint() *
      kron(Matrix::Identity(ds, ds), app.matrix()) * m.unitary();
  return HermitianObservable(
      meter_out - kron(sys.matrix(), Matrix::Identity(da, da)), tol);
}

namespace {

/// sqrt(Tr[(rho (x) rho_app) X^2]) for Hermitian X on the joint space.
double joint_rms(const MeasurementModel& m, const Matrix& x,
                 const Tolerances& tol) {
  const Matrix joint = kron(m.rho().matrix(), m.rho_app().matrix());
  const Complex t = trace_product(joint, x * x);
  if (std::abs(t.imag()) >
      tol.imaginary_residue * std::max(1.0, x.squaredNorm())) {
    throw Error("joint_rms: trace has a non-real residue");
  }
  return std::sqrt(std::max(0.0, t.real()));
}

}  // namespace

double error(const MeasurementModel& m, Meter which, const Tolerances& tol) {
  return joint_rms(m, noise_operator(m, which, tol).matrix(), tol);
}

double disturbance(const MeasurementModel& m, const Tolerances& tol) {
  const int da = m.dim_apparatus();
  const Matrix b_joint = kron(m.b().matrix(), Matrix::Identity(da, da));
  const Matrix b_out = m.unitary().adjoint() * b_joint * m.unitary();
  return joint_rms(m, b_out - b_joint, tol);
}

double unbiasedness_defect(const MeasurementModel& m, Meter which,
                           const Tolerances& tol) {
  const int ds = m.dim_system();
  const int da = m.dim_apparatus();
  const HermitianObservable& sys = (which == Meter::a) ? m.a() : m.b();
  const HermitianObservable& app = (which == Meter::a) ? m.a_app() : m.b_app();
  const Matrix meter_out =
      m.unitary().adjoint() *
      kron(Matrix::Identity(ds, ds), app.matrix()) * m.unitary();
  // Tr_app[(I (x) rho_app) M] averages the apparatus factor; the defect is
  // how far that effective system operator sits from the target observable.
  const Matrix averaged = partial_trace_apparatus(
      kron(Matrix::Identity(ds, ds), m.rho_app().matrix()) * meter_out, ds,
      da);
  return operator_norm(averaged - sys.matrix());
}

std::optional<double> generalized_coefficient(const Spectrum& system,
                                              const Spectrum& apparatus,
                                              const Tolerances& tol) {
  const double p_max = system.lambda_max() * apparatus.lambda_max();
  const double p_min = system.lambda_min() * apparatus.lambda_min();
  // p_max = p_min happens exactly when both factors are maximally mixed, and
  // then the coefficient diverges.
  if (p_max - p_min <= tol.degeneracy * p_max) return std::nullopt;
  if (p_min == 0.0) return 0.5;
  return 0.5 * (p_max + p_min) / (p_max - p_min);
}

namespace {

InequalityVerdict verdict(double lhs, double commutator_term,
                          double coeff_classical, double coeff_generalized,
                          bool degenerate, const Tolerances& tol) {
  InequalityVerdict v;
  v.lhs = lhs;
  v.rhs_classical = coeff_classical * commutator_term;
  // At a maximally mixed joint state the commutator expectation vanishes
  // identically, so the diverging coefficient multiplies an exact zero; the
  // bound carries no content and the RHS is taken as zero.
  v.rhs_generalized = degenerate ? 0.0 : coeff_generalized * commutator_term;
  v.classical_holds =
      lhs - v.rhs_classical >= -tol.slack * std::max(1.0, std::abs(lhs));
  v.generalized_holds =
      lhs - v.rhs_generalized >= -tol.slack * std::max(1.0, std::abs(lhs));
  return v;
}

}  // namespace

ErrorDisturbanceReport evaluate(const MeasurementModel& m,
                                const Tolerances& tol) {
  ErrorDisturbanceReport r;
  r.eps_a = error(m, Meter::a, tol);
  r.eps_b = error(m, Meter::b, tol);
  r.eta_b = disturbance(m, tol);
  r.sigma_a = std::sqrt(variance(m.a(), m.rho(), tol));
  r.sigma_b = std::sqrt(variance(m.b(), m.rho(), tol));
  r.commutator_term =
      std::abs(trace_product(m.rho().matrix(),
                             commutator(m.a().matrix(), m.b().matrix())));
  const std::optional<double> coeff = generalized_coefficient(
      m.rho().spectrum(), m.rho_app().spectrum(), tol);
  r.coeff_degenerate = !coeff.has_value();
  r.coeff_generalized =
      coeff.value_or(std::numeric_limits<double>::infinity());
  r.unbias_defect_a = unbiasedness_defect(m, Meter::a, tol);
  r.unbias_defect_b = unbiasedness_defect(m, Meter::b, tol);
  r.unbiased = r.unbias_defect_a <= tol.unbiasedness &&
               r.unbias_defect_b <= tol.unbiasedness;
  r.arthurs_goodman =
      verdict(r.eps_a * r.eps_b, r.commutator_term, r.coeff_classical,
              r.coeff_generalized, r.coeff_degenerate, tol);
  r.ozawa1 = verdict(
      r.eps_a * r.eps_b + r.eps_a * r.sigma_b + r.sigma_a * r.eps_b,
      r.commutator_term, r.coeff_classical, r.coeff_generalized,
      r.coeff_degenerate, tol);
  r.ozawa2 = verdict(
      r.eps_a * r.eta_b + r.eps_a * r.sigma_b + r.sigma_a * r.eta_b,
      r.commutator_term, r.coeff_classical, r.coeff_generalized,
      r.coeff_degenerate, tol);
  return r;
}

MeasurementModel random_qubit_model(SeededRng& rng, const Tolerances& tol) {
  DensityMatrix rho = random_density(rng, 2);
  DensityMatrix rho_app = random_density(rng, 2);
  Matrix u = random_unitary(rng, 4);
  HermitianObservable a = random_hermitian(rng, 2, tol);
  HermitianObservable b = random_hermitian(rng, 2, tol);
  // Two spectral functions of one Hermitian share its eigenbasis, so the
  // meters commute by construction.
  const EigenSystem basis = hermitian_eigen(random_hermitian(rng, 2, tol).matrix());
  RealVector ga(2), gb(2);
  for (int i = 0; i < 2; ++i) ga[i] = rng.normal();
  for (int i = 0; i < 2; ++i) gb[i] = rng.normal();
  const Matrix a_app = basis.eigenvectors * ga.cast<Complex>().asDiagonal() *
                       basis.eigenvectors.adjoint();
  const Matrix b_app = basis.eigenvectors * gb.cast<Complex>().asDiagonal() *
                       basis.eigenvectors.adjoint();
  return MeasurementModel(std::move(rho), std::move(rho_app), std::move(u),
                          std::move(a), std::move(b),
                          HermitianObservable(a_app, tol),
                          HermitianObservable(b_app, tol), tol);
}

}  // namespace ursa
