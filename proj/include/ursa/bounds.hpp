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

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ursa/state.hpp"

namespace ursa {

/// The catalog of variance-product lower bounds on V(A) V(B).
///
///   Robertson                 (1/4) |<[A,B]>|^2
///   Schrodinger               (1/4) |<[A,B]>|^2 + Cov(A,B)^2
///   NormTypeI                 c_opt(rho) ||[A,B]||_rho^2
///   StrengthenedSchrodinger   Schrodinger + c_opt(rho) ||[A,B]||_rho^2
///   GeneralizedRobertson      c'_opt(rho) |<[A,B]>|^2
///   GeneralizedSchrodinger    c'_opt(rho) |<[A,B]>|^2 + Cov(A,B)^2
///   NormTypeIIcombined        same value as GeneralizedSchrodinger, kept as
///                             a distinct catalog entry
///   MaximallyMixed            (1/d^2) ||[A,B]||_op^2, the bound at rho = I/d
enum class RelationKind {
  robertson,
  schrodinger,
  norm_type_i,
  strengthened_schrodinger,
  generalized_robertson,
  generalized_schrodinger,
  norm_type_ii_combined,
  maximally_mixed,
};

inline constexpr std::array<RelationKind, 8> kAllRelationKinds = {
    RelationKind::robertson,
    RelationKind::schrodinger,
    RelationKind::norm_type_i,
    RelationKind::strengthened_schrodinger,
    RelationKind::generalized_robertson,
    RelationKind::generalized_schrodinger,
    RelationKind::norm_type_ii_combined,
    RelationKind::maximally_mixed,
};

/// Kebab-case name, e.g. "generalized-robertson".
std::string_view relation_name(RelationKind kind);

/// Inverse of relation_name.
std::optional<RelationKind> relation_from_name(std::string_view name);

/// Optimal coefficient of the state-weighted commutator norm:
/// lambda_min lambda_smin / (lambda_min + lambda_smin); zero iff
/// lambda_min = 0.
double c_opt(const Spectrum& spectrum);

/// Optimal coefficient of the squared commutator expectation:
/// (lambda_max + lambda_min)^2 / (4 (lambda_max - lambda_min)^2).
/// Always >= 1/4, with equality iff lambda_min = 0.  Returns std::nullopt
/// for a maximally mixed spectrum, where the coefficient diverges.
std::optional<double> c_prime_opt(const Spectrum& spectrum,
                                  const Tolerances& tol = default_tolerances());

/// A bound value together with its formula pieces.  The decomposition
/// satisfies value = commutator_term + covariance_term + norm_term (missing
/// keys count as zero); the remaining keys are diagnostics and flags.
struct RhsValue {
  double value = 0.0;
  std::map<std::string, double> terms;
};

/// One evaluated relation instance.  holds <=> slack >= -slack_tol * max(1, lhs).
struct BoundReport {
  RelationKind kind = RelationKind::robertson;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
  bool holds = false;
  std::map<std::string, double> terms;
};

/// Shared per-instance quantities consumed by the relation formulas.
/// Computes the commutator, its expectation and state norm, the variances
/// and the covariance once; individual kinds reuse them.  Holds views of its
/// operands, which must outlive it.
class BoundEvaluator {
 public:
  BoundEvaluator(const DensityMatrix& rho, const HermitianObservable& a,
                 const HermitianObservable& b,
                 const Tolerances& tol = default_tolerances());

  /// V(A) V(B) at the evaluator's state.
  double lhs() const { return var_a_ * var_b_; }
  double variance_a() const { return var_a_; }
  double variance_b() const { return var_b_; }
  double covariance_value() const { return cov_; }
  /// |<[A,B]>|^2.
  double commutator_expectation_sq() const { return comm_exp_sq_; }
  const Matrix& commutator_matrix() const { return comm_; }

  RhsValue rhs(RelationKind kind) const;
  BoundReport check(RelationKind kind) const;

 private:
  double op_norm_sq() const;
  double mm_lhs() const;

  const DensityMatrix* rho_;
  const HermitianObservable* a_;
  const HermitianObservable* b_;
  Tolerances tol_;
  Matrix comm_;
  double var_a_ = 0.0;
  double var_b_ = 0.0;
  double cov_ = 0.0;
  double comm_exp_sq_ = 0.0;
  double comm_rho_norm_sq_ = 0.0;
  double c_opt_ = 0.0;
  std::optional<double> c_prime_;
  mutable std::optional<double> op_norm_sq_;
};

/// RHS of one relation kind.  For the generalized kinds at a maximally mixed
/// state the diverging commutator term is transparently replaced by the
/// MaximallyMixed norm term and the substitution is flagged in terms.
RhsValue rhs(RelationKind kind, const DensityMatrix& rho,
             const HermitianObservable& a, const HermitianObservable& b,
             const Tolerances& tol = default_tolerances());

/// Evaluates both sides of one relation kind.  Every kind is a theorem, so a
/// false verdict on validated inputs signals a defect.  The MaximallyMixed
/// kind is a statement about rho = I/d: its LHS is evaluated there (the rho
/// argument only fixes the dimension) and the report flags this.
BoundReport check(RelationKind kind, const DensityMatrix& rho,
                  const HermitianObservable& a, const HermitianObservable& b,
                  const Tolerances& tol = default_tolerances());

/// check() over the whole catalog, in enum order.
std::vector<BoundReport> check_all(const DensityMatrix& rho,
                                   const HermitianObservable& a,
                                   const HermitianObservable& b,
                                   const Tolerances& tol = default_tolerances());

}  // namespace ursa
