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

#include "ursa/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

namespace ursa {

double operator_norm(const Eigen::Ref<const Matrix>& x) {
  detail::require_square(x, "operator_norm");
  if (!x.allFinite()) {
    throw ValidationError("operator_norm: non-finite entries");
  }
  if (x.rows() == 0) return 0.0;
  if (x.rows() <= 32) {
    Eigen::JacobiSVD<Matrix> svd(x);
    return svd.singularValues()(0);
  }
  Eigen::BDCSVD<Matrix> svd(x);
  return svd.singularValues()(0);
}

double hermiticity_defect(const Eigen::Ref<const Matrix>& x) {
  detail::require_square(x, "hermiticity_defect");
  return operator_norm(x - x.adjoint());
}

namespace {

// Sorts an eigensystem ascending by eigenvalue, permuting the vector columns
// alongside.
EigenSystem sorted(RealVector values, Matrix vectors) {
  const Eigen::Index d = values.size();
  std::vector<Eigen::Index> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](Eigen::Index i, Eigen::Index j) {
    return values[i] < values[j];
  });
  EigenSystem out;
  out.eigenvalues.resize(d);
  out.eigenvectors.resize(d, d);
  for (Eigen::Index k = 0; k < d; ++k) {
    out.eigenvalues[k] = values[perm[k]];
    out.eigenvectors.col(k) = vectors.col(perm[k]);
  }
  return out;
}

}  // namespace

EigenSystem jacobi_hermitian_eigen(const Eigen::Ref<const Matrix>& h,
                                   long max_sweeps) {
  detail::require_square(h, "jacobi_hermitian_eigen");
  const Eigen::Index d = h.rows();
  if (d == 0) {
    return {RealVector(0), Matrix(0, 0)};
  }
  if (max_sweeps <= 0) max_sweeps = 100 * static_cast<long>(d) * d;

  Matrix a = Matrix(0.5 * (h + h.adjoint()));
  Matrix v = Matrix::Identity(d, d);
  const double frob = std::max(1.0, a.norm());
  const double target = 1e-14 * frob;

  for (long sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < d; ++p) {
      for (Eigen::Index q = p + 1; q < d; ++q) {
        off += 2.0 * std::norm(a(p, q));
      }
    }
    if (std::sqrt(off) <= target) {
      RealVector values = a.diagonal().real();
      return sorted(std::move(values), std::move(v));
    }
    for (Eigen::Index p = 0; p < d; ++p) {
      for (Eigen::Index q = p + 1; q < d; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag <= 1e-300) continue;
        // Unitary rotation on the (p, q) plane zeroing a(p, q):
        //   J_pp = c, J_pq = -s e^{i phi}, J_qp = s e^{-i phi}, J_qq = c
        // with apq = mag e^{i phi}, tau = (a_qq - a_pp)/(2 mag) and
        // t = tan(theta) the root of t^2 - 2 tau t - 1 = 0 closer to zero.
        const Complex phase = apq / mag;
        const double tau = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
        const double t = (tau >= 0.0)
                             ? -1.0 / (tau + std::sqrt(1.0 + tau * tau))
                             : 1.0 / (-tau + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex spq = s * phase;          // s e^{i phi}
        const Complex spq_conj = std::conj(spq);  // s e^{-i phi}

        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double new_app = app * c * c + aqq * s * s + 2.0 * s * c * mag;
        const double new_aqq = app * s * s + aqq * c * c - 2.0 * s * c * mag;

        // Column update A <- A J.
        for (Eigen::Index k = 0; k < d; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = c * akp + spq_conj * akq;
          a(k, q) = -spq * akp + c * akq;
        }
        // Row update A <- J^dag A.
        for (Eigen::Index k = 0; k < d; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = c * apk + spq * aqk;
          a(q, k) = -spq_conj * apk + c * aqk;
        }
        a(p, p) = new_app;
        a(q, q) = new_aqq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        // Eigenvector accumulation V <- V J.
        for (Eigen::Index k = 0; k < d; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = c * vkp + spq_conj * vkq;
          v(k, q) = -spq * vkp + c * vkq;
        }
      }
    }
  }
  throw NonConvergenceError("jacobi_hermitian_eigen: sweep cap exhausted");
}

EigenSystem hermitian_eigen(const Eigen::Ref<const Matrix>& h,
                            EigenSolverKind kind) {
  detail::require_square(h, "hermitian_eigen");
  if (!h.allFinite()) {
    throw ValidationError("hermitian_eigen: non-finite entries");
  }
  if (kind == EigenSolverKind::jacobi) {
    return jacobi_hermitian_eigen(h);
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) {
    return jacobi_hermitian_eigen(h);
  }
  return {solver.eigenvalues(), solver.eigenvectors()};
}

}  // namespace ursa
