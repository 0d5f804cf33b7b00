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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

namespace ursa {

struct NelderMeadOptions {
  /// Offset added to each coordinate of the start point to build the initial
  /// simplex.
  double initial_step = 0.25;
  /// Relative spread of simplex values below which the run converges.
  double f_tol = 1e-12;
  /// Infinity-norm simplex diameter below which the run converges.
  double x_tol = 1e-8;
  std::int64_t max_evals = 100000;
};

struct NelderMeadResult {
  Eigen::VectorXd x;
  double value = std::numeric_limits<double>::infinity();
  std::int64_t evaluations = 0;
  bool converged = false;
};

/// Derivative-free simplex minimization with the dimension-adaptive
/// expansion/contraction/shrink coefficients.  The objective may return
/// +infinity to reject a proposal.  Fully deterministic for a fixed start
/// point.
template <typename F>
NelderMeadResult nelder_mead(F&& f, const Eigen::VectorXd& x0,
                             const NelderMeadOptions& opts = {}) {
  const int n = static_cast<int>(x0.size());
  const double alpha = 1.0;                  // reflection
  const double beta = 1.0 + 2.0 / n;         // expansion
  const double gamma = 0.75 - 0.5 / n;       // contraction
  const double delta = 1.0 - 1.0 / n;        // shrink

  NelderMeadResult result;
  std::vector<Eigen::VectorXd> xs(n + 1, x0);
  std::vector<double> fs(n + 1);
  for (int i = 1; i <= n; ++i) {
    xs[i](i - 1) += opts.initial_step;
  }
  for (int i = 0; i <= n; ++i) {
    fs[i] = f(xs[i]);
    ++result.evaluations;
  }

  std::vector<int> order(n + 1);
  while (result.evaluations < opts.max_evals) {
    // 1. Order the simplex (stable: ties keep insertion order).
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return fs[i] < fs[j]; });
    const int best = order[0];
    const int second_worst = order[n - 1];
    const int worst = order[n];

    // 2. Convergence: small value spread and small simplex diameter.
    const double spread = fs[worst] - fs[best];
    double diameter = 0.0;
    for (int i = 0; i <= n; ++i) {
      diameter =
          std::max(diameter, (xs[i] - xs[best]).cwiseAbs().maxCoeff());
    }
    if (std::isfinite(spread) &&
        spread <= opts.f_tol * (std::abs(fs[best]) + 1e-30) &&
        diameter <= opts.x_tol) {
      result.converged = true;
      break;
    }

    // 3. Centroid of all vertices but the worst.
    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (int i = 0; i <= n; ++i) {
      if (i != worst) centroid += xs[i];
    }
    centroid /= n;
    const Eigen::VectorXd direction = centroid - xs[worst];

    // 4. Reflection.
    Eigen::VectorXd xr = centroid + alpha * direction;
    const double fr = f(xr);
    ++result.evaluations;
    if (fr < fs[best]) {
      // 5. Expansion.
      Eigen::VectorXd xe = centroid + beta * direction;
      const double fe = f(xe);
      ++result.evaluations;
      if (fe < fr) {
        xs[worst] = std::move(xe);
        fs[worst] = fe;
      } else {
        xs[worst] = std::move(xr);
        fs[worst] = fr;
      }
      continue;
    }
    if (fr < fs[second_worst]) {
      xs[worst] = std::move(xr);
      fs[worst] = fr;
      continue;
    }

    // 6. Contraction (outside when the reflection improved on the worst
    //    vertex, inside otherwise).
    Eigen::VectorXd xc;
    double fc;
    if (fr < fs[worst]) {
      xc = centroid + gamma * alpha * direction;
      fc = f(xc);
      ++result.evaluations;
      if (fc <= fr) {
        xs[worst] = std::move(xc);
        fs[worst] = fc;
        continue;
      }
    } else {
      xc = centroid - gamma * direction;
      fc = f(xc);
      ++result.evaluations;
      if (fc < fs[worst]) {
        xs[worst] = std::move(xc);
        fs[worst] = fc;
        continue;
      }
    }

    // 7. Shrink toward the best vertex.
    for (int i = 0; i <= n; ++i) {
      if (i == best) continue;
      xs[i] = xs[best] + delta * (xs[i] - xs[best]);
      fs[i] = f(xs[i]);
      ++result.evaluations;
    }
  }

  int best = 0;
  for (int i = 1; i <= n; ++i) {
    if (fs[i] < fs[best]) best = i;
  }
  result.x = xs[best];
  result.value = fs[best];
  return result;
}

}  // namespace ursa
