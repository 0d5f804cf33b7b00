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

#include "ursa/bounds.hpp"

#include <cmath>

namespace ursa {

std::string_view relation_name(RelationKind kind) {
  switch (kind) {
    case RelationKind::robertson:
      return "robertson";
    case RelationKind::schrodinger:
      return "schrodinger";
    case RelationKind::norm_type_i:
      return "norm-type-i";
    case RelationKind::strengthened_schrodinger:
      return "strengthened-schrodinger";
    case RelationKind::generalized_robertson:
      return "generalized-robertson";
    case RelationKind::generalized_schrodinger:
      return "generalized-schrodinger";
    case RelationKind::norm_type_ii_combined:
      return "norm-type-ii-combined";
    case RelationKind::maximally_mixed:
      return "maximally-mixed";
  }
  throw RangeError("relation_name: unknown kind");
}

std::optional<RelationKind> relation_from_name(std::string_view name) {
  for (RelationKind kind : kAllRelationKinds) {
    if (relation_name(kind) == name) return kind;
  }
  return std::nullopt;
}

double c_opt(const Spectrum& spectrum) {
  const double lmin = spectrum.lambda_min();
  const double lsmin = spectrum.lambda_smin();
  const double denom = lmin + lsmin;
  if (denom <= 0.0) return 0.0;
  return lmin * lsmin / denom;
}

std::optional<double> c_prime_opt(const Spectrum& spectrum,
                                  const Tolerances& tol) {
  const double lmin = spectrum.lambda_min();
  const double lmax = spectrum.lambda_max();
  if (lmax - lmin <= tol.degeneracy * lmax) return std::nullopt;
  const double sum = lmax + lmin;
  const double gap = lmax - lmin;
  return sum * sum / (4.0 * gap * gap);
}

BoundEvaluator::BoundEvaluator(const DensityMatrix& rho,
                               const HermitianObservable& a,
                               const HermitianObservable& b,
                               const Tolerances& tol)
    : rho_(&rho), a_(&a), b_(&b), tol_(tol) {
  if (a.dim() != rho.dim() || b.dim() != rho.dim()) {
    throw DimMismatchError("BoundEvaluator: operand dimensions differ");
  }
  comm_ = commutator(a.matrix(), b.matrix());
  // <[A,B]> is purely imaginary for Hermitian A, B.
  const Complex t = trace_product(rho.matrix(), comm_);
  comm_exp_sq_ = std::norm(t);
  comm_rho_norm_sq_ = rho_norm_sq(comm_, rho, tol);
  var_a_ = variance(a, rho, tol);
  var_b_ = variance(b, rho, tol);
  cov_ = covariance(a, b, rho, tol);
  c_opt_ = c_opt(rho.spectrum());
  c_prime_ = c_prime_opt(rho.spectrum(), tol);
}

double BoundEvaluator::op_norm_sq() const {
  if (!op_norm_sq_) {
    const double n = operator_norm(comm_);
    op_norm_sq_ = n * n;
  }
  return *op_norm_sq_;
}

// V(A) V(B) at I/d: V_{I/d}(X) = Tr(X^2)/d - (Tr X / d)^2.
double BoundEvaluator::mm_lhs() const {
  const double d = static_cast<double>(rho_->dim());
  const double mean_a = a_->matrix().trace().real() / d;
  const double mean_b = b_->matrix().trace().real() / d;
  const double va = a_->matrix().squaredNorm() / d - mean_a * mean_a;
  const double vb = b_->matrix().squaredNorm() / d - mean_b * mean_b;
  return std::max(0.0, va) * std::max(0.0, vb);
}

RhsValue BoundEvaluator::rhs(RelationKind kind) const {
  RhsValue out;
  const double d = static_cast<double>(rho_->dim());
  const double cov_sq = cov_ * cov_;

  const auto mm_norm_term = [&](RhsValue& v) {
    const double coefficient = 1.0 / (d * d);
    const double term = coefficient * op_norm_sq();
    v.terms["coefficient"] = coefficient;
    v.terms["op_norm_sq"] = op_norm_sq();
    v.terms["norm_term"] = term;
    return term;
  };

  switch (kind) {
    case RelationKind::robertson: {
      const double term = 0.25 * comm_exp_sq_;
      out.terms["coefficient"] = 0.25;
      out.terms["commutator_expectation_sq"] = comm_exp_sq_;
      out.terms["commutator_term"] = term;
      out.value = term;
      break;
    }
    case RelationKind::schrodinger: {
      const double term = 0.25 * comm_exp_sq_;
      out.terms["coefficient"] = 0.25;
      out.terms["commutator_expectation_sq"] = comm_exp_sq_;
      out.terms["commutator_term"] = term;
      out.terms["covariance"] = cov_;
      out.terms["covariance_term"] = cov_sq;
      out.value = term + cov_sq;
      break;
    }
    case RelationKind::norm_type_i: {
      const double term = c_opt_ * comm_rho_norm_sq_;
      out.terms["coefficient"] = c_opt_;
      out.terms["rho_norm_sq"] = comm_rho_norm_sq_;
      out.terms["norm_term"] = term;
      out.value = term;
      break;
    }
    case RelationKind::strengthened_schrodinger: {
      const double comm_term = 0.25 * comm_exp_sq_;
      const double norm_term = c_opt_ * comm_rho_norm_sq_;
      out.terms["commutator_expectation_sq"] = comm_exp_sq_;
      out.terms["commutator_term"] = comm_term;
      out.terms["covariance"] = cov_;
      out.terms["covariance_term"] = cov_sq;
      out.terms["coefficient"] = c_opt_;
      out.terms["rho_norm_sq"] = comm_rho_norm_sq_;
      out.terms["norm_term"] = norm_term;
      out.value = comm_term + cov_sq + norm_term;
      break;
    }
    case RelationKind::generalized_robertson: {
      if (!c_prime_) {
        out.value = mm_norm_term(out);
        out.terms["maximally_mixed_substitution"] = 1.0;
        break;
      }
      const double term = *c_prime_ * comm_exp_sq_;
      out.terms["coefficient"] = *c_prime_;
      out.terms["commutator_expectation_sq"] = comm_exp_sq_;
      out.terms["commutator_term"] = term;
      if (*c_prime_ > tol_.coefficient_flag) {
        out.terms["coefficient_conditioning"] = 1.0;
      }
      out.value = term;
      break;
    }
    case RelationKind::generalized_schrodinger:
    case RelationKind::norm_type_ii_combined: {
      out.terms["covariance"] = cov_;
      out.terms["covariance_term"] = cov_sq;
      if (!c_prime_) {
        // The commutator term degenerates to the maximally-mixed norm term;
        // the covariance term survives the limit.
        out.value = mm_norm_term(out) + cov_sq;
        out.terms["maximally_mixed_substitution"] = 1.0;
        break;
      }
      const double term = *c_prime_ * comm_exp_sq_;
      out.terms["coefficient"] = *c_prime_;
      out.terms["commutator_expectation_sq"] = comm_exp_sq_;
      out.terms["commutator_term"] = term;
      if (*c_prime_ > tol_.coefficient_flag) {
        out.terms["coefficient_conditioning"] = 1.0;
      }
      out.value = term + cov_sq;
      break;
    }
    case RelationKind::maximally_mixed: {
      out.value = mm_norm_term(out);
      break;
    }
  }
  return out;
}

BoundReport BoundEvaluator::check(RelationKind kind) const {
  BoundReport report;
  report.kind = kind;
  RhsValue r = rhs(kind);
  if (kind == RelationKind::maximally_mixed) {
    report.lhs = mm_lhs();
    r.terms["lhs_at_maximally_mixed"] = 1.0;
  } else {
    report.lhs = lhs();
  }
  report.rhs = r.value;
  report.slack = report.lhs - report.rhs;
  report.holds = report.slack >= -tol_.slack * std::max(1.0, report.lhs);
  report.terms = std::move(r.terms);
  return report;
}

RhsValue rhs(RelationKind kind, const DensityMatrix& rho,
             const HermitianObservable& a, const HermitianObservable& b,
             const Tolerances& tol) {
  return BoundEvaluator(rho, a, b, tol).rhs(kind);
}

BoundReport check(RelationKind kind, const DensityMatrix& rho,
                  const HermitianObservable& a, const HermitianObservable& b,
                  const Tolerances& tol) {
  return BoundEvaluator(rho, a, b, tol).check(kind);
}

std::vector<BoundReport> check_all(const DensityMatrix& rho,
                                   const HermitianObservable& a,
                                   const HermitianObservable& b,
                                   const Tolerances& tol) {
  BoundEvaluator evaluator(rho, a, b, tol);
  std::vector<BoundReport> reports;
  reports.reserve(kAllRelationKinds.size());
  for (RelationKind kind : kAllRelationKinds) {
    reports.push_back(evaluator.check(kind));
  }
  return reports;
}

}  // namespace ursa
