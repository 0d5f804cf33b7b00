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

#include "ursa/sampling.hpp"
#include "ursa/state.hpp"

using namespace ursa;

namespace {

DensityMatrix diag_state(std::initializer_list<double> values) {
  const int d = static_cast<int>(values.size());
  Matrix m = Matrix::Zero(d, d);
  int i = 0;
  for (double v : values) m(i, i) = Complex(v, 0), ++i;
  return DensityMatrix(m);
}

}  // namespace

TEST_SUITE("state") {

TEST_CASE("Spectrum validates its input") {
  RealVector ok(3);
  ok << 0.2, 0.3, 0.5;
  const Spectrum s(ok);
  CHECK(s.dim() == 3);
  CHECK(s.lambda_min() == 0.2);
  CHECK(s.lambda_smin() == 0.3);
  CHECK(s.lambda_max() == 0.5);
  CHECK(s.sum() == doctest::Approx(1.0).epsilon(1e-15));

  RealVector descending(2);
  descending << 0.7, 0.3;
  CHECK_THROWS_AS((void)Spectrum(descending), ValidationError);

  RealVector negative(2);
  negative << -1e-6, 1.0;
  CHECK_THROWS_AS((void)Spectrum(negative), ValidationError);

  // A tiny negative inside the slack is clamped to zero.
  RealVector dust(2);
  dust << -1e-13, 1.0;
  const Spectrum clamped(dust);
  CHECK(clamped.lambda_min() == 0.0);
}

TEST_CASE("Spectrum degeneracy predicates") {
  RealVector flat(3);
  flat << 1.0 / 3, 1.0 / 3, 1.0 / 3;
  CHECK(Spectrum(flat).maximally_mixed());
  CHECK(Spectrum(flat).faithful());

  RealVector pure(2);
  pure << 0.0, 1.0;
  CHECK(!Spectrum(pure).maximally_mixed());
  CHECK(!Spectrum(pure).faithful());

  RealVector mixed(2);
  mixed << 0.25, 0.75;
  CHECK(!Spectrum(mixed).maximally_mixed());
  CHECK(Spectrum(mixed).faithful());
}

TEST_CASE("HermitianObservable symmetrizes and validates") {
  CHECK_THROWS_AS(HermitianObservable(Matrix::Zero(2, 3)), DimMismatchError);

  Matrix skew = Matrix::Zero(2, 2);
  skew(0, 1) = Complex(1, 0);
  CHECK_THROWS_AS((void)HermitianObservable(skew), ValidationError);

  // A defect inside the tolerance is absorbed by (X + X^dag)/2.
  Matrix near = pauli::x();
  near(0, 1) += Complex(0, 1e-13);
  const HermitianObservable h(near);
  CHECK((h.matrix() - h.matrix().adjoint()).norm() == 0.0);
  CHECK(std::abs(h.matrix()(0, 1).imag() - 0.5e-13) <= 1e-20);
}

TEST_CASE("DensityMatrix accepts a mixed diagonal state") {
  const DensityMatrix rho = diag_state({0.25, 0.75});
  CHECK(rho.dim() == 2);
  CHECK(rho.spectrum().lambda_min() == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(rho.spectrum().lambda_max() == doctest::Approx(0.75).epsilon(1e-14));
  CHECK(rho.purity() == doctest::Approx(0.625).epsilon(1e-14));
  // Eigenvector columns diagonalize the state in ascending order.
  const Matrix& v = rho.eigenvectors();
  const Matrix d = v.adjoint() * rho.matrix() * v;
  CHECK(std::abs(d(0, 0).real() - 0.25) <= 1e-14);
  CHECK(std::abs(d(1, 1).real() - 0.75) <= 1e-14);
}

TEST_CASE("DensityMatrix rejects invalid input") {
  CHECK_THROWS_AS(diag_state({0.25, 0.25}), ValidationError);  // trace 1/2
  CHECK_THROWS_AS(diag_state({-0.1, 1.1}), ValidationError);   // negative eig

  Matrix skew = Matrix::Zero(2, 2);
  skew(0, 0) = Complex(0.5, 0);
  skew(1, 1) = Complex(0.5, 0);
  skew(0, 1) = Complex(0.3, 0);  // no matching lower entry
  CHECK_THROWS_AS((void)DensityMatrix(skew), ValidationError);
}

TEST_CASE("DensityMatrix clips eigenvalue dust") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = Complex(-5e-11, 0);
  m(1, 1) = Complex(1.0 + 5e-11, 0);
  const DensityMatrix rho(m);
  CHECK(rho.spectrum().lambda_min() == 0.0);
  CHECK(rho.spectrum().sum() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("maximally_mixed is exact") {
  const DensityMatrix rho = DensityMatrix::maximally_mixed(4);
  CHECK(rho.dim() == 4);
  CHECK((rho.matrix() - 0.25 * Matrix::Identity(4, 4)).norm() == 0.0);
  CHECK(rho.spectrum().maximally_mixed());
  CHECK(rho.purity() == doctest::Approx(0.25).epsilon(1e-15));
}

TEST_CASE("expectation of sigma_z on a diagonal state") {
  const DensityMatrix rho = diag_state({0.25, 0.75});
  const HermitianObservable sz(pauli::z());
  CHECK(expectation(sz, rho) == doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("rho_norm_sq frozen oracle") {
  const DensityMatrix rho = diag_state({0.25, 0.75});
  CHECK(rho_norm_sq(pauli::x(), rho) == doctest::Approx(1.0).epsilon(1e-14));

  Matrix x(2, 2);
  x << Complex(1, 0), Complex(2, 1), Complex(2, -1), Complex(-1, 0);
  CHECK(rho_norm_sq(x, rho) == doctest::Approx(6.0).epsilon(1e-13));
}

TEST_CASE("rho_norm_sq equals the eigenbasis pair expansion") {
  // For zero-diagonal X expressed in the state eigenbasis,
  // ||X||_rho^2 = sum_{i<j} (lambda_i + lambda_j) |x_ij|^2.  This identity
  // is what makes the off-diagonal ratio parameterization work.
  SeededRng rng(23, 0);
  for (int d = 2; d <= 5; ++d) {
    const DensityMatrix rho = random_density(rng, d);
    Matrix x_eig = Matrix::Zero(d, d);
    double expansion = 0.0;
    for (int i = 0; i < d; ++i) {
      for (int j = i + 1; j < d; ++j) {
        const Complex entry(rng.normal(), rng.normal());
        x_eig(i, j) = entry;
        x_eig(j, i) = std::conj(entry);
        expansion += (rho.spectrum().values()[i] + rho.spectrum().values()[j]) *
                     std::norm(entry);
      }
    }
    const Matrix x =
        rho.eigenvectors() * x_eig * rho.eigenvectors().adjoint();
    CHECK(rho_norm_sq(x, rho) ==
          doctest::Approx(expansion).epsilon(1e-11));
  }
}

TEST_CASE("variance on frozen fixtures") {
  const DensityMatrix rho = diag_state({0.25, 0.75});
  CHECK(variance(HermitianObservable(pauli::z()), rho) ==
        doctest::Approx(0.75).epsilon(1e-14));
  CHECK(variance(HermitianObservable(Matrix::Identity(2, 2)), rho) <= 1e-14);

  Matrix m(2, 2);
  m << Complex(0.5, 0), Complex(0.2, -0.3), Complex(0.2, 0.3), Complex(-1, 0);
  CHECK(variance(HermitianObservable(m), rho) ==
        doctest::Approx(0.5518749999999999).epsilon(1e-13));
}

TEST_CASE("variance equals the centered state norm") {
  SeededRng rng(29, 0);
  for (int d = 2; d <= 4; ++d) {
    const DensityMatrix rho = random_density(rng, d);
    const HermitianObservable x = random_hermitian(rng, d);
    const double mean = expectation(x, rho);
    const Matrix centered =
        x.matrix() - Complex(mean, 0) * Matrix::Identity(d, d);
    CHECK(variance(x, rho) ==
          doctest::Approx(rho_norm_sq(centered, rho)).epsilon(1e-11));
  }
}

TEST_CASE("covariance on frozen fixtures") {
  const DensityMatrix rho = diag_state({0.25, 0.75});
  const HermitianObservable sx(pauli::x());
  const HermitianObservable sy(pauli::y());
  CHECK(std::abs(covariance(sx, sy, rho)) <= 1e-14);
  CHECK(covariance(sx, sx, rho) == doctest::Approx(1.0).epsilon(1e-14));

  Matrix m(2, 2);
  m << Complex(0.5, 0), Complex(0.2, -0.3), Complex(0.2, 0.3), Complex(-1, 0);
  CHECK(covariance(sx, HermitianObservable(m), rho) ==
        doctest::Approx(0.2).epsilon(1e-13));
}

TEST_CASE("typed commutator checks its output structure") {
  const HermitianObservable sx(pauli::x());
  const HermitianObservable sy(pauli::y());
  const Matrix c = commutator(sx, sy);
  CHECK((c - Complex(0, 2) * pauli::z()).norm() <= 1e-15);
  const Matrix ac = anticommutator(sx, sy);
  CHECK(ac.norm() <= 1e-15);
}

}  // TEST_SUITE
