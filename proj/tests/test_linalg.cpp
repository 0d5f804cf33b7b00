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

#include "ursa/linalg.hpp"
#include "ursa/rng.hpp"
#include "ursa/types.hpp"

using namespace ursa;

namespace {

Matrix random_hermitian_matrix(SeededRng& rng, int d) {
  Matrix g(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) g(i, j) = Complex(rng.normal(), rng.normal());
  }
  return 0.5 * (g + g.adjoint());
}

}  // namespace

TEST_SUITE("linalg") {

TEST_CASE("trace_product matches the direct product trace") {
  Matrix a(2, 2), b(2, 2);
  a << Complex(1, 2), Complex(3, 0), Complex(0, 0), Complex(0, -1);
  b << Complex(2, 0), Complex(0, -1), Complex(4, 1), Complex(0.5, 0);
  const Complex t = trace_product(a, b);
  CHECK(t.real() == doctest::Approx(14.0).epsilon(1e-14));
  CHECK(t.imag() == doctest::Approx(6.5).epsilon(1e-14));

  // Linearity in a transposed layout is easy to get wrong; compare against
  // the naive evaluation on a random operand pair.
  SeededRng rng(3, 0);
  Matrix x = random_hermitian_matrix(rng, 4);
  Matrix y(4, 4);
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) y(i, j) = Complex(rng.normal(), rng.normal());
  }
  const Complex direct = (x * y).trace();
  const Complex fast = trace_product(x, y);
  CHECK(std::abs(direct - fast) <= 1e-12 * std::abs(direct));
}

TEST_CASE("trace_product rejects mismatched operands") {
  CHECK_THROWS_AS(trace_product(Matrix::Zero(2, 3), Matrix::Zero(3, 2)),
                  DimMismatchError);
  CHECK_THROWS_AS(trace_product(Matrix::Zero(2, 2), Matrix::Zero(3, 3)),
                  DimMismatchError);
}

TEST_CASE("commutator and anticommutator on the Pauli algebra") {
  const Matrix sx = pauli::x();
  const Matrix sy = pauli::y();
  const Matrix sz = pauli::z();

  CHECK((commutator(sx, sy) - Complex(0, 2) * sz).norm() <= 1e-15);
  CHECK((commutator(sy, sz) - Complex(0, 2) * sx).norm() <= 1e-15);
  CHECK(anticommutator(sx, sy).norm() <= 1e-15);
  CHECK((anticommutator(sx, sx) - 2.0 * Matrix::Identity(2, 2)).norm() <=
        1e-15);
}

TEST_CASE("operator_norm is the largest singular value") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = Complex(3, 0);
  m(1, 1) = Complex(4, 0);
  CHECK(operator_norm(m) == doctest::Approx(5.0).epsilon(1e-13));

  Matrix diag = Matrix::Zero(2, 2);
  diag(0, 0) = Complex(-7, 0);
  diag(1, 1) = Complex(2, 0);
  CHECK(operator_norm(diag) == doctest::Approx(7.0).epsilon(1e-13));

  CHECK(operator_norm(Matrix::Zero(3, 3)) == 0.0);
  CHECK(operator_norm(Matrix(0, 0)) == 0.0);
  CHECK_THROWS_AS(operator_norm(Matrix::Zero(2, 3)), DimMismatchError);
}

TEST_CASE("operator_norm is unitarily invariant") {
  SeededRng rng(5, 0);
  const Matrix h = random_hermitian_matrix(rng, 5);
  // For Hermitian arguments the norm equals the largest absolute eigenvalue.
  const EigenSystem es = hermitian_eigen(h);
  const double by_eigs = std::max(std::abs(es.eigenvalues[0]),
                                  std::abs(es.eigenvalues[4]));
  CHECK(operator_norm(h) == doctest::Approx(by_eigs).epsilon(1e-12));
}

TEST_CASE("hermiticity_defect") {
  CHECK(hermiticity_defect(pauli::y()) == 0.0);
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = Complex(1, 0);
  // m - m^dag = [[0, 1], [-1, 0]], an orthogonal matrix: norm 1.
  CHECK(hermiticity_defect(m) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("hermitian_eigen on a frozen 3x3 operand") {
  Matrix h(3, 3);
  h << Complex(2.0, 0), Complex(1.0, -1.0), Complex(0, 0.5),
      Complex(1.0, 1.0), Complex(-1.0, 0), Complex(0.25, 0),
      Complex(0, -0.5), Complex(0.25, 0), Complex(0.75, 0);
  const EigenSystem es = hermitian_eigen(h);
  CHECK(es.eigenvalues[0] ==
        doctest::Approx(-1.6251943763295413).epsilon(1e-12));
  CHECK(es.eigenvalues[1] ==
        doctest::Approx(0.725756582829471).epsilon(1e-12));
  CHECK(es.eigenvalues[2] ==
        doctest::Approx(2.64943779350007).epsilon(1e-12));
  // Residual and orthonormality.
  for (int k = 0; k < 3; ++k) {
    const ComplexVector v = es.eigenvectors.col(k);
    CHECK((h * v - es.eigenvalues[k] * v).norm() <= 1e-12);
  }
  CHECK((es.eigenvectors.adjoint() * es.eigenvectors -
         Matrix::Identity(3, 3)).norm() <= 1e-12);
}

TEST_CASE("hermitian_eigen returns ascending order") {
  SeededRng rng(11, 0);
  for (int d = 2; d <= 6; ++d) {
    const EigenSystem es = hermitian_eigen(random_hermitian_matrix(rng, d));
    for (int i = 0; i + 1 < d; ++i) {
      CHECK(es.eigenvalues[i] <= es.eigenvalues[i + 1]);
    }
  }
}

TEST_CASE("jacobi agrees with the platform solver") {
  SeededRng rng(17, 0);
  for (int d = 2; d <= 7; ++d) {
    for (int rep = 0; rep < 5; ++rep) {
      const Matrix h = random_hermitian_matrix(rng, d);
      const EigenSystem a = hermitian_eigen(h, EigenSolverKind::platform);
      const EigenSystem b = hermitian_eigen(h, EigenSolverKind::jacobi);
      const double scale = std::max(1.0, operator_norm(h));
      for (int i = 0; i < d; ++i) {
        CHECK(std::abs(a.eigenvalues[i] - b.eigenvalues[i]) <= 1e-11 * scale);
      }
      for (int k = 0; k < d; ++k) {
        const ComplexVector v = b.eigenvectors.col(k);
        CHECK((h * v - b.eigenvalues[k] * v).norm() <= 1e-10 * scale);
      }
      CHECK((b.eigenvectors.adjoint() * b.eigenvectors -
             Matrix::Identity(d, d)).norm() <= 1e-11);
    }
  }
}

TEST_CASE("jacobi solves a 2x2 with known closed form") {
  Matrix h(2, 2);
  h << Complex(0, 0), Complex(1, 0), Complex(1, 0), Complex(2, 0);
  const EigenSystem es = jacobi_hermitian_eigen(h);
  // Eigenvalues 1 -+ sqrt(2).
  CHECK(es.eigenvalues[0] ==
        doctest::Approx(1.0 - std::sqrt(2.0)).epsilon(1e-14));
  CHECK(es.eigenvalues[1] ==
        doctest::Approx(1.0 + std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("jacobi handles an already-diagonal operand") {
  Matrix h = Matrix::Zero(3, 3);
  h(0, 0) = Complex(3, 0);
  h(1, 1) = Complex(-1, 0);
  h(2, 2) = Complex(0.5, 0);
  const EigenSystem es = jacobi_hermitian_eigen(h);
  CHECK(es.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(es.eigenvalues[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(es.eigenvalues[2] == doctest::Approx(3.0).epsilon(1e-15));
}

}  // TEST_SUITE
