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
#include <cstdint>
#include <optional>
#include <utility>

#include "ursa/bounds.hpp"
#include "ursa/rng.hpp"

namespace ursa {

/// Uniform point on the unit 2-sphere (normalized gaussian triple).
std::array<double, 3> random_unit_vector3(SeededRng& rng);

/// a . sigma for a unit vector a; eigenvalues are exactly +-1.
HermitianObservable qubit_observable(const std::array<double, 3>& a,
                                     const Tolerances& tol = default_tolerances());

/// Qubit state of purity P along the axis n:
/// rho = (I + r n.sigma)/2 with r = sqrt(2P - 1), spectrum
/// ((1-r)/2, (1+r)/2).  P must lie in [1/2, 1].
DensityMatrix qubit_state(double purity, const std::array<double, 3>& n,
                          const Tolerances& tol = default_tolerances());

/// Haar-distributed unitary (QR of a complex Ginibre matrix with the
/// R-diagonal phase fix).
Matrix random_unitary(SeededRng& rng, int dim);

/// Hermitian matrix (G + G^dag)/2 with iid standard complex gaussian G.
HermitianObservable random_hermitian(SeededRng& rng, int dim,
                                     const Tolerances& tol = default_tolerances());

/// Uniform point on the probability simplex (normalized exponentials),
/// returned ascending.
RealVector random_simplex(SeededRng& rng, int dim);

/// Ascending simplex point resampled until lambda_min >= min_gap/(2 dim) and
/// all consecutive gaps are >= min_gap/dim.
RealVector random_nondegenerate_spectrum(SeededRng& rng, int dim,
                                         double min_gap = 1e-3);

/// Random density matrix: the given spectrum (or a uniform simplex draw)
/// conjugated by a Haar unitary.  A supplied spectrum must be non-negative
/// with unit sum; it is sorted ascending and normalized exactly.
DensityMatrix random_density(SeededRng& rng, int dim,
                             const std::optional<RealVector>& spectrum = {},
                             const Tolerances& tol = default_tolerances());

/// Averages over uniformly random observable axes a, b of the four bound
/// families, as closed forms in the purity P:
///   robertson                 (2/9)(2P - 1)
///   schrodinger               (4/9)(P^2 - P + 1)
///   generalized_robertson     2/9
///   generalized_schrodinger   (4/9)(P^2 - 2P + 2)
struct AveragedBounds {
  double robertson = 0.0;
  double schrodinger = 0.0;
  double generalized_robertson = 0.0;
  double generalized_schrodinger = 0.0;
};

AveragedBounds avg_bounds_analytic(double purity);

/// One Monte Carlo sweep point: sample means, standard errors of the means,
/// and the analytic values.
struct PuritySweepRow {
  double purity = 0.0;
  std::int64_t n_samples = 0;
  AveragedBounds mc;
  AveragedBounds se;
  AveragedBounds analytic;
  std::uint64_t seed = 0;
};

/// Monte Carlo estimate of the four averaged bounds at one purity, sampling
/// observable axes uniformly on the sphere for the state of purity P along
/// state_axis.  At P = 1/2 the generalized integrands are evaluated as the
/// directional limit along state_axis, (1/4)|<psi_min|[A,B]|psi_min>|^2 with
/// psi_min the lambda_min eigenvector direction, which is what the constant
/// 2/9 column means; away from P = 1/2 every value comes from the bounds
/// catalog.  Accumulation is chunked pairwise summation, so a row is a pure
/// function of (purity, n, rng state).
PuritySweepRow avg_bounds_mc(double purity, std::int64_t n, SeededRng& rng,
                             const std::array<double, 3>& state_axis = {0, 0, 1},
                             const Tolerances& tol = default_tolerances());

/// Generic per-kind Monte Carlo average of rhs(kind) over the observable
/// sphere with bounds-catalog semantics throughout (including the
/// maximally-mixed substitution at P = 1/2).  Returns (mean, standard
/// error).  This is the comparison path for kinds outside the four-column
/// sweep, e.g. StrengthenedSchrodinger.
std::pair<double, double> mc_average(RelationKind kind, double purity,
                                     std::int64_t n, SeededRng& rng,
                                     const Tolerances& tol = default_tolerances());

}  // namespace ursa
