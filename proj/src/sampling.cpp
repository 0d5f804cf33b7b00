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

#include "ursa/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ursa/linalg.hpp"

namespace ursa {

namespace {

/// Deterministic chunked pairwise accumulator.  Sample values are added into
/// a running chunk; full chunks are reduced pairwise at the end, so the total
/// depends only on the sequence of values, not on how the loop is staged.
class ChunkedSum {
 public:
  void add(double x) {
    chunk_ += x;
    if (++filled_ == kChunk) {
      partials_.push_back(chunk_);
      chunk_ = 0.0;
      filled_ = 0;
    }
  }

  double total() const {
    std::vector<double> level = partials_;
    if (filled_ > 0) level.push_back(chunk_);
    if (level.empty()) return 0.0;
    while (level.size() > 1) {
      std::vector<double> next;
      next.reserve((level.size() + 1) / 2);
      for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
        next.push_back(level[i] + level[i + 1]);
      }
      if (level.size() % 2 == 1) next.push_back(level.back());
      level = std::move(next);
    }
    return level.front();
  }

 private:
  static constexpr std::size_t kChunk = 4096;
  std::vector<double> partials_;
  double chunk_ = 0.0;
  std::size_t filled_ = 0;
};

/// Mean and standard error of the mean from chunked sums of x and x^2.
struct MeanSe {
  double mean = 0.0;
  double se = 0.0;
};

MeanSe reduce(const ChunkedSum& sum, const ChunkedSum& sum_sq,
              std::int64_t n) {
  MeanSe out;
  out.mean = sum.total() / static_cast<double>(n);
  if (n > 1) {
    const double var =
        (sum_sq.total() - static_cast<double>(n) * out.mean * out.mean) /
        static_cast<double>(n - 1);
    out.se = std::sqrt(std::max(0.0, var) / static_cast<double>(n));
  }
  return out;
}

}  // namespace

std::array<double, 3> random_unit_vector3(SeededRng& rng) {
  for (;;) {
    const double x = rng.normal();
    const double y = rng.normal();
    const double z = rng.normal();
    const double r = std::sqrt(x * x + y * y + z * z);
    if (r > 1e-12) return {x / r, y / r, z / r};
  }
}

HermitianObservable qubit_observable(const std::array<double, 3>& a,
                                     const Tolerances& tol) {
  const double r = std::sqrt(a[0] * a[0] + a[1] * a[1] + a[2] * a[2]);
  if (!(r > 1e-12)) {
    throw ValidationError("qubit_observable: axis must be nonzero");
  }
  Matrix m(2, 2);
  m << Complex(a[2] / r, 0), Complex(a[0] / r, -a[1] / r),
      Complex(a[0] / r, a[1] / r), Complex(-a[2] / r, 0);
  return HermitianObservable(m, tol);
}

DensityMatrix qubit_state(double purity, const std::array<double, 3>& n,
                          const Tolerances& tol) {
  if (!(purity >= 0.5 && purity <= 1.0)) {
    throw RangeError("qubit_state: purity must lie in [1/2, 1]");
  }
  const double r = std::sqrt(std::max(0.0, 2.0 * purity - 1.0));
  const Matrix axis = qubit_observable(n, tol).matrix();
  const Matrix rho = 0.5 * (Matrix::Identity(2, 2) + r * axis);
  return DensityMatrix(rho, tol);
}

Matrix random_unitary(SeededRng& rng, int dim) {
  if (dim < 1) throw RangeError("random_unitary: dim must be positive");
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = Complex(rng.normal(), rng.normal());
    }
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(dim, dim);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fixing the phases of the R diagonal makes the distribution Haar rather
  // than merely unitary.
  for (int j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    const double mag = std::abs(d);
    q.col(j) *= (mag > 0.0) ? d / mag : Complex(1, 0);
  }
  return q;
}

HermitianObservable random_hermitian(SeededRng& rng, int dim,
                                     const Tolerances& tol) {
  if (dim < 1) throw RangeError("random_hermitian: dim must be positive");
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      g(i, j) = Complex(rng.normal(), rng.normal());
    }
  }
  return HermitianObservable(0.5 * (g + g.adjoint()), tol);
}

RealVector random_simplex(SeededRng& rng, int dim) {
  if (dim < 1) throw RangeError("random_simplex: dim must be positive");
  RealVector v(dim);
  double sum = 0.0;
  do {
    for (int i = 0; i < dim; ++i) {
      v[i] = -std::log(1.0 - rng.uniform01());
    }
    sum = v.sum();
  } while (!(sum > 0.0));
  v /= sum;
  std::sort(v.data(), v.data() + dim);
  return v;
}

RealVector random_nondegenerate_spectrum(SeededRng& rng, int dim,
                                         double min_gap) {
  if (!(min_gap > 0.0)) {
    throw RangeError("random_nondegenerate_spectrum: min_gap must be positive");
  }
  const double floor = min_gap / (2.0 * dim);
  const double gap = min_gap / dim;
  for (int attempt = 0; attempt < 100000; ++attempt) {
    RealVector v = random_simplex(rng, dim);
    bool ok = v[0] >= floor;
    for (int i = 0; ok && i + 1 < dim; ++i) ok = (v[i + 1] - v[i]) >= gap;
    if (ok) return v;
  }
  throw NonConvergenceError(
      "random_nondegenerate_spectrum: rejection sampling did not terminate");
}

DensityMatrix random_density(SeededRng& rng, int dim,
                             const std::optional<RealVector>& spectrum,
                             const Tolerances& tol) {
  if (dim < 1) throw RangeError("random_density: dim must be positive");
  RealVector lambda;
  if (spectrum.has_value()) {
    if (spectrum->size() != dim) {
      throw DimMismatchError("random_density: spectrum size must equal dim");
    }
    lambda = *spectrum;
    for (int i = 0; i < dim; ++i) {
      if (!(lambda[i] >= 0.0)) {
        throw ValidationError(
            "random_density: spectrum entries must be non-negative");
      }
    }
    const double sum = lambda.sum();
    if (!(sum > 0.0) || std::abs(sum - 1.0) > 1e-9) {
      throw ValidationError("random_density: spectrum must sum to one");
    }
    lambda /= sum;
    std::sort(lambda.data(), lambda.data() + dim);
  } else {
    lambda = random_simplex(rng, dim);
  }
  const Matrix u = random_unitary(rng, dim);
  const Matrix rho = u * lambda.cast<Complex>().asDiagonal() * u.adjoint();
  return DensityMatrix(rho, tol);
}

AveragedBounds avg_bounds_analytic(double purity) {
  if (!(purity >= 0.5 && purity <= 1.0)) {
    throw RangeError("avg_bounds_analytic: purity must lie in [1/2, 1]");
  }
  AveragedBounds out;
  out.robertson = (2.0 / 9.0) * (2.0 * purity - 1.0);
  out.schrodinger = (4.0 / 9.0) * (purity * purity - purity + 1.0);
  out.generalized_robertson = 2.0 / 9.0;
  out.generalized_schrodinger =
      (4.0 / 9.0) * (purity * purity - 2.0 * purity + 2.0);
  return out;
}

PuritySweepRow avg_bounds_mc(double purity, std::int64_t n, SeededRng& rng,
                             const std::array<double, 3>& state_axis,
                             const Tolerances& tol) {
  if (n < 1) throw RangeError("avg_bounds_mc: n must be positive");
  const DensityMatrix rho = qubit_state(purity, state_axis, tol);
  const bool at_limit = rho.spectrum().maximally_mixed(tol);
  const std::optional<double> cp = c_prime_opt(rho.spectrum(), tol);

  // At the purity floor the generalized coefficient diverges while the
  // commutator expectation vanishes; the product has a finite directional
  // limit (1/4)|<psi|[A, B]|psi>|^2 along the lambda_min eigenvector psi of
  // the approach axis.
  ComplexVector psi_min;
  if (at_limit) {
    const EigenSystem es =
        hermitian_eigen(qubit_observable(state_axis, tol).matrix());
    psi_min = es.eigenvectors.col(0);
  }

  ChunkedSum sums[4];
  ChunkedSum sums_sq[4];
  for (std::int64_t k = 0; k < n; ++k) {
    const HermitianObservable a = qubit_observable(random_unit_vector3(rng), tol);
    const HermitianObservable b = qubit_observable(random_unit_vector3(rng), tol);
    const Matrix comm = commutator(a.matrix(), b.matrix());
    const double comm_exp_sq = std::norm(trace_product(rho.matrix(), comm));
    const double cov = covariance(a, b, rho, tol);
    const double rob = 0.25 * comm_exp_sq;
    const double sch = rob + cov * cov;
    double grob;
    if (at_limit) {
      grob = 0.25 * std::norm((psi_min.adjoint() * comm * psi_min)(0, 0));
    } else {
      grob = *cp * comm_exp_sq;
    }
    const double gsch = grob + cov * cov;
    const double vals[4] = {rob, sch, grob, gsch};
    for (int c = 0; c < 4; ++c) {
      sums[c].add(vals[c]);
      sums_sq[c].add(vals[c] * vals[c]);
    }
  }

  const MeanSe rob = reduce(sums[0], sums_sq[0], n);
  const MeanSe sch = reduce(sums[1], sums_sq[1], n);
  const MeanSe grob = reduce(sums[2], sums_sq[2], n);
  const MeanSe gsch = reduce(sums[3], sums_sq[3], n);

  PuritySweepRow row;
  row.purity = purity;
  row.n_samples = n;
  row.mc = {rob.mean, sch.mean, grob.mean, gsch.mean};
  row.se = {rob.se, sch.se, grob.se, gsch.se};
  row.analytic = avg_bounds_analytic(purity);
  row.seed = rng.seed();
  return row;
}

std::pair<double, double> mc_average(RelationKind kind, double purity,
                                     std::int64_t n, SeededRng& rng,
                                     const Tolerances& tol) {
  if (n < 1) throw RangeError("mc_average: n must be positive");
  const DensityMatrix rho = qubit_state(purity, {0, 0, 1}, tol);
  ChunkedSum sum;
  ChunkedSum sum_sq;
  for (std::int64_t k = 0; k < n; ++k) {
    const HermitianObservable a = qubit_observable(random_unit_vector3(rng), tol);
    const HermitianObservable b = qubit_observable(random_unit_vector3(rng), tol);
    BoundEvaluator ev(rho, a, b, tol);
    const double val = ev.rhs(kind).value;
    sum.add(val);
    sum_sq.add(val * val);
  }
  const MeanSe out = reduce(sum, sum_sq, n);
  return {out.mean, out.se};
}

}  // namespace ursa
