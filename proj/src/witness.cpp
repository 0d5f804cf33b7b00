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

#include "ursa/witness.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "ursa/nelder_mead.hpp"
#include "ursa/rng.hpp"

namespace ursa {

ExtremalPair extremal_pair(const DensityMatrix& rho, double a, double b,
                           const Tolerances& tol) {
  if (rho.spectrum().maximally_mixed(tol)) {
    throw MaximallyMixedStateError(
        "extremal_pair: the coefficient diverges at the maximally mixed "
        "state");
  }
  if (a == 0.0 || b == 0.0) {
    throw ZeroScaleError("extremal_pair: scales a and b must be nonzero");
  }
  const int d = rho.dim();
  Matrix a_eig = Matrix::Zero(d, d);
  Matrix b_eig = Matrix::Zero(d, d);
  a_eig(0, d - 1) = a;
  a_eig(d - 1, 0) = a;
  b_eig(d - 1, 0) = Complex(0, b);
  b_eig(0, d - 1) = Complex(0, -b);
  const Matrix& v = rho.eigenvectors();
  return ExtremalPair{
      HermitianObservable(v * a_eig * v.adjoint(), tol),
      HermitianObservable(v * b_eig * v.adjoint(), tol), a, b};
}

double tightness_residual(const DensityMatrix& rho, double a, double b,
                          const Tolerances& tol) {
  const ExtremalPair pair = extremal_pair(rho, a, b, tol);
  const BoundReport report =
      check(RelationKind::generalized_robertson, rho, pair.A, pair.B, tol);
  return std::abs(report.slack);
}

namespace {

// Off-diagonal parameterization of one zero-diagonal Hermitian observable in
// the state eigenbasis: for each index pair p = (i < j) two reals,
// (Re x_ij, Im x_ij).  In that basis the relevant functionals are weighted
// sums over pairs:
//   ||X||_rho^2   = sum_p (lambda_i + lambda_j) |x_p|^2      (and <X> = 0)
//   <[A,B]>       = 2i sum_p (lambda_j - lambda_i) Im(conj(a_p) b_p)
struct PairWeights {
  std::vector<double> norm;   // lambda_i + lambda_j
  std::vector<double> comm;   // lambda_j - lambda_i
};

PairWeights pair_weights(const Spectrum& spectrum) {
  const int d = spectrum.dim();
  PairWeights w;
  w.norm.reserve(d * (d - 1) / 2);
  w.comm.reserve(d * (d - 1) / 2);
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j) {
      w.norm.push_back(spectrum.values()[i] + spectrum.values()[j]);
      w.comm.push_back(spectrum.values()[j] - spectrum.values()[i]);
    }
  }
  return w;
}

// The ratio V(A) V(B) / |<[A,B]>|^2 on the parameterization above.  It is
// scale-invariant, so no normalization is needed during the search.
double ratio_objective(const PairWeights& w, const Eigen::VectorXd& theta,
                       const Tolerances& tol) {
  const std::size_t npairs = w.norm.size();
  const double* a = theta.data();
  const double* b = theta.data() + 2 * npairs;
  double norm_a = 0.0;
  double norm_b = 0.0;
  double f = 0.0;
  for (std::size_t p = 0; p < npairs; ++p) {
    const double ar = a[2 * p];
    const double ai = a[2 * p + 1];
    const double br = b[2 * p];
    const double bi = b[2 * p + 1];
    norm_a += w.norm[p] * (ar * ar + ai * ai);
    norm_b += w.norm[p] * (br * br + bi * bi);
    f += w.comm[p] * (ar * bi - ai * br);
  }
  const double product = norm_a * norm_b;
  if (product < 1e-300) return std::numeric_limits<double>::infinity();
  const double comm_sq = 4.0 * f * f;
  if (comm_sq < tol.commutator_degeneracy * product) {
    return std::numeric_limits<double>::infinity();
  }
  return product / comm_sq;
}

// Materializes one normalized (||X||_rho = 1) observable from its parameter
// block, rotated back to the input basis.
HermitianObservable materialize(const DensityMatrix& rho,
                                const PairWeights& w, const double* block,
                                const Tolerances& tol) {
  const int d = rho.dim();
  double norm_sq = 0.0;
  std::size_t p = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j, ++p) {
      norm_sq += w.norm[p] * (block[2 * p] * block[2 * p] +
                              block[2 * p + 1] * block[2 * p + 1]);
    }
  }
  const double scale = 1.0 / std::sqrt(norm_sq);
  Matrix x = Matrix::Zero(d, d);
  p = 0;
  for (int i = 0; i < d; ++i) {
    for (int j = i + 1; j < d; ++j, ++p) {
      const Complex entry(scale * block[2 * p], scale * block[2 * p + 1]);
      x(i, j) = entry;
      x(j, i) = std::conj(entry);
    }
  }
  const Matrix& v = rho.eigenvectors();
  return HermitianObservable(v * x * v.adjoint(), tol);
}

}  // namespace

RatioSearchResult minimize_ratio(const DensityMatrix& rho,
                                 const RatioSearchConfig& config,
                                 const Tolerances& tol) {
  const Spectrum& spectrum = rho.spectrum();
  if (spectrum.maximally_mixed(tol)) {
    throw MaximallyMixedStateError(
        "minimize_ratio: the ratio has no positive infimum at the maximally "
        "mixed state");
  }
  if (!spectrum.faithful(tol)) {
    throw ValidationError("minimize_ratio: requires a faithful state");
  }
  if (config.restarts < 1) {
    throw RangeError("minimize_ratio: restarts must be positive");
  }
  if (config.tol <= 0.0) {
    throw RangeError("minimize_ratio: tol must be positive");
  }

  const PairWeights w = pair_weights(spectrum);
  const int n = static_cast<int>(4 * w.norm.size());
  const auto objective = [&](const Eigen::VectorXd& theta) {
    return ratio_objective(w, theta, tol);
  };

  const std::int64_t per_call_default =
      std::clamp<std::int64_t>(250LL * n * n, 4000, 60000);
  std::int64_t remaining = config.max_evals > 0
                               ? config.max_evals
                               : std::numeric_limits<std::int64_t>::max();

  RatioSearchResult best{std::numeric_limits<double>::infinity(),
                         HermitianObservable(Matrix::Identity(1, 1), tol),
                         HermitianObservable(Matrix::Identity(1, 1), tol),
                         0,
                         0,
                         false};
  Eigen::VectorXd best_theta;

  for (int restart = 0; restart < config.restarts && remaining > 0;
       ++restart) {
    ++best.restarts;
    SeededRng rng(config.seed, static_cast<std::uint64_t>(restart));
    Eigen::VectorXd theta(n);
    for (int i = 0; i < n; ++i) theta[i] = rng.normal();

    // One coarse run and two polish runs with shrinking initial simplices.
    double value = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (double step : {0.25, 0.02, 0.002}) {
      NelderMeadOptions opts;
      opts.initial_step = step;
      opts.max_evals = std::min<std::int64_t>(per_call_default, remaining);
      opts.f_tol = 1e-12;
      opts.x_tol = 1e-8;
      if (opts.max_evals <= 0) break;
      NelderMeadResult run = nelder_mead(objective, theta, opts);
      best.evaluations += run.evaluations;
      remaining -= run.evaluations;
      theta = run.x;
      value = run.value;
      converged = run.converged;
    }
    if (value < best.best_ratio) {
      best.best_ratio = value;
      best_theta = theta;
      best.converged = converged;
    }
  }

  if (!std::isfinite(best.best_ratio)) {
    throw NonConvergenceError(
        "minimize_ratio: no admissible proposal was found");
  }
  best.best_A = materialize(rho, w, best_theta.data(), tol);
  best.best_B =
      materialize(rho, w, best_theta.data() + 2 * w.norm.size(), tol);
  return best;
}

}  // namespace ursa
