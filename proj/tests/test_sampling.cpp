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

#include <doctest.h>

#include <cmath>
#include <random>

#include "ursa/sampling.hpp"

using namespace ursa;

TEST_SUITE("sampling") {

TEST_CASE("the platform engine matches the pinned standard value") {
  // The language standard fixes the 10000th output of a default-constructed
  // 64-bit Mersenne twister; this guards the engine underneath SeededRng.
  std::mt19937_64 engine;
  engine.discard(9999);
  CHECK(engine() == 9981545732273789042ULL);
}

TEST_CASE("SeededRng reproduces and decorrelates") {
  SeededRng a(42, 0);
  SeededRng b(42, 0);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

  SeededRng c(42, 1);
  SeededRng d(43, 0);
  CHECK(a.next_u64() != c.next_u64());
  CHECK(a.next_u64() != d.next_u64());
  CHECK(a.seed() == 42);
  CHECK(c.stream() == 1);
}

TEST_CASE("uniform01 stays in the half-open unit interval") {
  SeededRng rng(7, 0);
  double sum = 0.0;
  const int n = 100000;
  for (int i = 0; i < n; ++i) {
    const double u = rng.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    sum += u;
  }
  // Mean 1/2, sd of the mean = 1/sqrt(12 n).
  CHECK(std::abs(sum / n - 0.5) <= 5.0 / std::sqrt(12.0 * n));
}

TEST_CASE("normal has the right first moments") {
  SeededRng rng(11, 0);
  const int n = 100000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double x = rng.normal();
    sum += x;
    sum_sq += x * x;
  }
  const double mean = sum / n;
  const double var = sum_sq / n - mean * mean;
  CHECK(std::abs(mean) <= 5.0 / std::sqrt(static_cast<double>(n)));
  // Var of the sample variance of a gaussian is 2/(n-1).
  CHECK(std::abs(var - 1.0) <= 5.0 * std::sqrt(2.0 / (n - 1.0)));
}

TEST_CASE("random_unit_vector3 lies on the sphere, uniformly") {
  SeededRng rng(13, 0);
  const int n = 20000;
  double sum_z = 0.0, sum_zz = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto v = random_unit_vector3(rng);
    const double norm =
        std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
    CHECK(std::abs(norm - 1.0) <= 1e-12);
    sum_z += v[2];
    sum_zz += v[2] * v[2];
  }
  // z is uniform on [-1, 1]: mean 0 (sd 1/sqrt(3)), E[z^2] = 1/3
  // (var of z^2 is 1/5 - 1/9 = 4/45).
  CHECK(std::abs(sum_z / n) <= 5.0 / std::sqrt(3.0 * n));
  CHECK(std::abs(sum_zz / n - 1.0 / 3) <= 5.0 * std::sqrt(4.0 / 45 / n));
}

TEST_CASE("qubit_observable squares to the identity") {
  SeededRng rng(17, 0);
  CHECK((qubit_observable({0, 0, 1}).matrix() - pauli::z()).norm() <= 1e-15);
  CHECK((qubit_observable({1, 0, 0}).matrix() - pauli::x()).norm() <= 1e-15);
  for (int rep = 0; rep < 20; ++rep) {
    const HermitianObservable a = qubit_observable(random_unit_vector3(rng));
    CHECK((a.matrix() * a.matrix() - Matrix::Identity(2, 2)).norm() <= 1e-13);
    CHECK(std::abs(a.matrix().trace()) <= 1e-14);
  }
  CHECK_THROWS_AS(qubit_observable({0, 0, 0}), ValidationError);
}

TEST_CASE("qubit_state has the announced spectrum and purity") {
  const DensityMatrix rho = qubit_state(0.75, {0, 0, 1});
  const double r = std::sqrt(0.5);
  CHECK(rho.spectrum().lambda_min() ==
        doctest::Approx((1 - r) / 2).epsilon(1e-13));
  CHECK(rho.spectrum().lambda_max() ==
        doctest::Approx((1 + r) / 2).epsilon(1e-13));
  CHECK(rho.purity() == doctest::Approx(0.75).epsilon(1e-13));

  CHECK(qubit_state(0.5, {0, 1, 0}).spectrum().maximally_mixed());
  CHECK(qubit_state(1.0, {1, 0, 0}).spectrum().lambda_min() <= 1e-14);
  CHECK_THROWS_AS(qubit_state(0.4, {0, 0, 1}), RangeError);
  CHECK_THROWS_AS(qubit_state(1.1, {0, 0, 1}), RangeError);
}

TEST_CASE("random_unitary is unitary and Haar-balanced") {
  SeededRng rng(19, 0);
  for (int d = 1; d <= 6; ++d) {
    const Matrix u = random_unitary(rng, d);
    CHECK((u.adjoint() * u - Matrix::Identity(d, d)).norm() <= 1e-12);
  }
  // E|u_00|^2 = 1/d for a Haar unitary; var = (2/(d(d+1)) - 1/d^2).
  const int n = 4000, d = 3;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    sum += std::norm(random_unitary(rng, d)(0, 0));
  }
  const double var = 2.0 / (d * (d + 1.0)) - 1.0 / (d * d);
  CHECK(std::abs(sum / n - 1.0 / d) <= 5.0 * std::sqrt(var / n));
}

TEST_CASE("random_hermitian is Hermitian") {
  SeededRng rng(23, 0);
  for (int d = 1; d <= 5; ++d) {
    const HermitianObservable h = random_hermitian(rng, d);
    CHECK((h.matrix() - h.matrix().adjoint()).norm() == 0.0);
  }
}

TEST_CASE("random_simplex is an ascending distribution") {
  SeededRng rng(29, 0);
  for (int rep = 0; rep < 50; ++rep) {
    const RealVector v = random_simplex(rng, 4);
    CHECK(v.sum() == doctest::Approx(1.0).epsilon(1e-12));
    for (int i = 0; i < 4; ++i) CHECK(v[i] >= 0.0);
    for (int i = 0; i + 1 < 4; ++i) CHECK(v[i] <= v[i + 1]);
  }
}

TEST_CASE("random_nondegenerate_spectrum keeps its gaps") {
  SeededRng rng(31, 0);
  const double min_gap = 1e-3;
  for (int d = 2; d <= 6; ++d) {
    for (int rep = 0; rep < 20; ++rep) {
      const RealVector v = random_nondegenerate_spectrum(rng, d, min_gap);
      CHECK(v[0] >= min_gap / (2.0 * d));
      for (int i = 0; i + 1 < d; ++i) CHECK(v[i + 1] - v[i] >= min_gap / d);
      CHECK(v.sum() == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("random_density realizes a requested spectrum") {
  SeededRng rng(37, 0);
  RealVector lambda(3);
  lambda << 0.5, 0.2, 0.3;  // unsorted on purpose
  const DensityMatrix rho = random_density(rng, 3, lambda);
  CHECK(rho.spectrum().values()[0] == doctest::Approx(0.2).epsilon(1e-10));
  CHECK(rho.spectrum().values()[1] == doctest::Approx(0.3).epsilon(1e-10));
  CHECK(rho.spectrum().values()[2] == doctest::Approx(0.5).epsilon(1e-10));

  RealVector bad(2);
  bad << -0.1, 1.1;
  CHECK_THROWS_AS(random_density(rng, 2, bad), ValidationError);
  RealVector wrong(2);
  wrong << 0.5, 0.5;
  CHECK_THROWS_AS(random_density(rng, 3, wrong), DimMismatchError);
}

TEST_CASE("avg_bounds_analytic spot values") {
  const AveragedBounds p1 = avg_bounds_analytic(1.0);
  CHECK(p1.robertson == doctest::Approx(2.0 / 9).epsilon(1e-14));
  CHECK(p1.schrodinger == doctest::Approx(4.0 / 9).epsilon(1e-14));
  CHECK(p1.generalized_robertson == doctest::Approx(2.0 / 9).epsilon(1e-14));
  CHECK(p1.generalized_schrodinger == doctest::Approx(4.0 / 9).epsilon(1e-14));

  const AveragedBounds p_half = avg_bounds_analytic(0.5);
  CHECK(p_half.robertson == 0.0);
  CHECK(p_half.schrodinger == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(p_half.generalized_robertson ==
        doctest::Approx(2.0 / 9).epsilon(1e-14));
  CHECK(p_half.generalized_schrodinger ==
        doctest::Approx(5.0 / 9).epsilon(1e-14));

  const AveragedBounds p34 = avg_bounds_analytic(0.75);
  CHECK(p34.robertson == doctest::Approx(1.0 / 9).epsilon(1e-14));
  CHECK(p34.schrodinger == doctest::Approx(13.0 / 36).epsilon(1e-14));
  CHECK(p34.generalized_schrodinger ==
        doctest::Approx(17.0 / 36).epsilon(1e-14));

  CHECK_THROWS_AS(avg_bounds_analytic(0.2), RangeError);
}

TEST_CASE("avg_bounds_mc agrees with the closed forms") {
  const std::int64_t n = 20000;
  for (double purity : {0.5, 0.75, 1.0}) {
    SeededRng rng(61, 0);
    const PuritySweepRow row = avg_bounds_mc(purity, n, rng);
    CHECK(row.purity == purity);
    CHECK(row.n_samples == n);
    CHECK(row.seed == 61);
    CHECK(std::abs(row.mc.robertson - row.analytic.robertson) <=
          5.0 * row.se.robertson + 1e-15);
    CHECK(std::abs(row.mc.schrodinger - row.analytic.schrodinger) <=
          5.0 * row.se.schrodinger + 1e-15);
    CHECK(std::abs(row.mc.generalized_robertson -
                   row.analytic.generalized_robertson) <=
          5.0 * row.se.generalized_robertson + 1e-15);
    CHECK(std::abs(row.mc.generalized_schrodinger -
                   row.analytic.generalized_schrodinger) <=
          5.0 * row.se.generalized_schrodinger + 1e-15);
  }
}

TEST_CASE("avg_bounds_mc is a pure function of its seed") {
  SeededRng r1(71, 3);
  SeededRng r2(71, 3);
  const PuritySweepRow a = avg_bounds_mc(0.8, 5000, r1);
  const PuritySweepRow b = avg_bounds_mc(0.8, 5000, r2);
  CHECK(a.mc.robertson == b.mc.robertson);
  CHECK(a.mc.generalized_schrodinger == b.mc.generalized_schrodinger);
  CHECK(a.se.schrodinger == b.se.schrodinger);
}

TEST_CASE("the averaged strengthened bound is its own curve") {
  // E[strengthened] = (4/9)(P - 2)^2, which differs from the generalized
  // Schrodinger average (4/9)(P^2 - 2P + 2) at every purity except 1.
  const double purity = 0.75;
  SeededRng rng(73, 0);
  const auto [mean, se] =
      mc_average(RelationKind::strengthened_schrodinger, purity, 20000, rng);
  const double expected = (4.0 / 9) * (purity - 2.0) * (purity - 2.0);
  CHECK(std::abs(mean - expected) <= 5.0 * se + 1e-15);

  const double gsch = avg_bounds_analytic(purity).generalized_schrodinger;
  CHECK(std::abs(mean - gsch) > 20.0 * se);
}

TEST_CASE("mc_average of the classical kinds matches the sweep columns") {
  SeededRng rng(79, 0);
  const auto [rob, rob_se] =
      mc_average(RelationKind::robertson, 0.75, 20000, rng);
  CHECK(std::abs(rob - 1.0 / 9) <= 5.0 * rob_se + 1e-15);
}

TEST_CASE("mc_average at the purity floor uses catalog semantics") {
  // At P = 1/2 the catalog substitutes the maximally-mixed norm bound for
  // the generalized kinds: E[(1/4)||[A,B]||_op^2] = E[|a x b|^2] = 2/3.
  // The sweep's directional-limit column (2/9) is a different object.
  SeededRng rng(83, 0);
  const auto [mean, se] =
      mc_average(RelationKind::generalized_robertson, 0.5, 20000, rng);
  CHECK(std::abs(mean - 2.0 / 3) <= 5.0 * se + 1e-15);
  CHECK(std::abs(mean - 2.0 / 9) > 20.0 * se);
}

}  // TEST_SUITE
