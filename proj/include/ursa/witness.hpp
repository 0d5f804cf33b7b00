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

#include <cstdint>

#include "ursa/bounds.hpp"

namespace ursa {

/// An observable pair saturating the generalized commutator bound.
struct ExtremalPair {
  HermitianObservable A;
  HermitianObservable B;
  double a = 0.0;
  double b = 0.0;
};

/// Builds the equality witness for c'_opt at the given state: in rho's
/// ascending eigenbasis A carries the real entry a at positions (1, d) and
/// (d, 1), B carries ib at (d, 1) and -ib at (1, d); both are returned in
/// the input basis.  With these, V(A) V(B) = c'_opt |<[A,B]>|^2 exactly
/// (both sides equal a^2 b^2 (lambda_min + lambda_max)^2).
///
/// Throws MaximallyMixedStateError when the coefficient diverges and
/// ZeroScaleError when a or b vanishes.
ExtremalPair extremal_pair(const DensityMatrix& rho, double a, double b,
                           const Tolerances& tol = default_tolerances());

/// |lhs - rhs| of the GeneralizedRobertson relation on the extremal pair.
double tightness_residual(const DensityMatrix& rho, double a, double b,
                          const Tolerances& tol = default_tolerances());

struct RatioSearchConfig {
  int restarts = 32;
  /// Total objective-evaluation budget; 0 selects a per-restart default.
  std::int64_t max_evals = 0;
  std::uint64_t seed = 42;
  /// Convergence tolerance on the ratio.
  double tol = 1e-6;
};

struct RatioSearchResult {
  double best_ratio = 0.0;
  HermitianObservable best_A;
  HermitianObservable best_B;
  int restarts = 0;
  std::int64_t evaluations = 0;
  bool converged = false;
};

/// Minimizes V(A) V(B) / |<[A,B]>|^2 over pairs of Hermitian observables
/// with zero diagonal in rho's eigenbasis, by multi-start simplex search
/// over the off-diagonal entries.  The infimum is c'_opt(rho); the returned
/// pair is normalized to ||A||_rho = ||B||_rho = 1 and mapped back to the
/// input basis.  Proposals with a vanishing commutator expectation are
/// rejected with ratio +infinity.
///
/// Requires a faithful, non-maximally-mixed state.
RatioSearchResult minimize_ratio(const DensityMatrix& rho,
                                 const RatioSearchConfig& config = {},
                                 const Tolerances& tol = default_tolerances());

}  // namespace ursa
