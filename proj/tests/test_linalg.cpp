#include <doctest.h>

#include "groupbell/errors.hpp"
#include "groupbell/linalg.hpp"
#include "helpers.hpp"

using namespace groupbell;
using namespace groupbell::testing;

TEST_SUITE("linalg") {

TEST_CASE("tensor of identities is the identity") {
  const Matrix i2 = Matrix::Identity(2, 2);
  CHECK(max_abs(tensor(i2, i2) - Matrix::Identity(4, 4)) == 0.0);
}

TEST_CASE("tensor with sigma_x produces the block swap") {
  Matrix sigma_x(2, 2);
  sigma_x << 0, 1, 1, 0;
  const Matrix out = tensor(sigma_x, Matrix::Identity(2, 2));
  Matrix expected = Matrix::Zero(4, 4);
  expected.block(0, 2, 2, 2) = Matrix::Identity(2, 2);
  expected.block(2, 0, 2, 2) = Matrix::Identity(2, 2);
  CHECK(max_abs(out - expected) == 0.0);
}

TEST_CASE("threefold qutrit tensor power is unitary of order six") {
  const Matrix u = qutrit_phase_unitary();
  const Matrix u3 = tensor_all(std::vector<Matrix>{u, u, u});
  REQUIRE(u3.rows() == 27);
  CHECK(is_unitary(u3));
  Matrix power = Matrix::Identity(27, 27);
  for (int m = 0; m < 6; ++m) {
    if (m > 0) CHECK(max_abs(power - Matrix::Identity(27, 27)) > 0.1);
    power = power * u3;
  }
  CHECK(max_abs(power - Matrix::Identity(27, 27)) < 1e-9);
}

TEST_CASE("tensor_all folds left to right bitwise") {
  TestRng rng(11);
  const Matrix a = rng.matrix(2), b = rng.matrix(3), c = rng.matrix(2);
  const Matrix folded = tensor_all(std::vector<Matrix>{a, b, c});
  const Matrix manual = tensor(tensor(a, b), c);
  CHECK(max_abs(folded - manual) == 0.0);
  CHECK(max_abs(folded - tensor(a, tensor(b, c))) < 1e-12);
}

TEST_CASE("diagonal matrix eigenpairs sort descending") {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = 3;
  m(1, 1) = 1;
  m(2, 2) = 2;
  const auto pairs = hermitian_eigendecompose(m);
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0].value == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(pairs[1].value == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(pairs[2].value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(pairs[0].vector(0)) == doctest::Approx(1.0));
  CHECK(std::abs(pairs[1].vector(2)) == doctest::Approx(1.0));
  CHECK(std::abs(pairs[2].vector(1)) == doctest::Approx(1.0));
}

TEST_CASE("sigma_x eigenvalues") {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  const auto pairs = hermitian_eigendecompose(m);
  CHECK(pairs[0].value == doctest::Approx(1.0));
  CHECK(pairs[1].value == doctest::Approx(-1.0));
}

TEST_CASE("largest eigenvalue of the 4x4 overlap matrix is 10/27") {
  Matrix m(4, 4);
  m << 7, 2, -1, -1, 2, 7, -1, -1, -1, -1, 7, -1, -1, -1, -1, 7;
  m /= 27.0;
  const auto pairs = hermitian_eigendecompose(m);
  CHECK(pairs[0].value == doctest::Approx(10.0 / 27.0).epsilon(1e-12));
}

TEST_CASE("non-Hermitian input is rejected") {
  Matrix m(2, 2);
  m << 0, 1, 0, 0;
  CHECK_THROWS_AS(hermitian_eigendecompose(m), NotHermitian);
}

TEST_CASE("eigendecomposition reconstructs the input") {
  TestRng rng(7);
  for (int round = 0; round < 10; ++round) {
    const int dim = 2 + rng.uniform_int(11);
    const Matrix m = rng.hermitian(dim);
    Matrix rebuilt = Matrix::Zero(dim, dim);
    for (const auto& pair : hermitian_eigendecompose(m))
      rebuilt += pair.value * (pair.vector * pair.vector.adjoint());
    CHECK(max_abs(rebuilt - m) < 1e-8);
  }
}

TEST_CASE("span reduction: rank one") {
  TestRng rng(3);
  Vector mu = rng.unit_vector(5) / std::sqrt(2.0);  // <mu|mu> = 0.5
  const auto pairs = span_reduced_eigensolve({mu});
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].value == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(pairs[0].vector.dot(mu / mu.norm())) == doctest::Approx(1.0));
}

TEST_CASE("span reduction: two orthonormal vectors give a projector") {
  const auto pairs = span_reduced_eigensolve({ket(4, 1), ket(4, 3)});
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].value == doctest::Approx(1.0));
  CHECK(pairs[1].value == doctest::Approx(1.0));
}

TEST_CASE("span reduction rejects mixed dimensions") {
  CHECK_THROWS_AS(span_reduced_eigensolve({ket(3, 0), ket(4, 0)}), DimensionMismatch);
  CHECK_THROWS_AS(span_reduced_eigensolve({}), DimensionMismatch);
}

TEST_CASE("span reduction agrees with the dense route on random spans") {
  TestRng rng(2024);
  for (int round = 0; round < 12; ++round) {
    const int dim = 4 + rng.uniform_int(24);  // up to 27
    const int count = 1 + rng.uniform_int(8);
    std::vector<Vector> vectors;
    for (int i = 0; i < count; ++i) vectors.push_back(rng.vector(dim));
    Matrix m = Matrix::Zero(dim, dim);
    for (const auto& v : vectors) m += v * v.adjoint();

    const auto reduced = span_reduced_eigensolve(vectors);
    const auto dense = hermitian_eigendecompose(m);
    for (std::size_t i = 0; i < reduced.size(); ++i) {
      CHECK(std::abs(reduced[i].value - dense[i].value) < 1e-9);
      // residual check: M v = lambda v
      CHECK((m * reduced[i].vector - reduced[i].value * reduced[i].vector).cwiseAbs().maxCoeff() <
            1e-8);
    }
  }
}

TEST_CASE("eigendecomposition is bit-for-bit repeatable") {
  TestRng rng(17);
  const Matrix m = rng.hermitian(9);
  const auto first = hermitian_eigendecompose(m);
  const auto second = hermitian_eigendecompose(m);
  REQUIRE(first.size() == second.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(first[i].value == second[i].value);
    CHECK((first[i].vector - second[i].vector).cwiseAbs().maxCoeff() == 0.0);
  }
}

TEST_CASE("canonical phase is invariant under global phases") {
  TestRng rng(5);
  const Vector v = rng.unit_vector(6);
  const Vector a = canonical_phase(v);
  const Vector b = canonical_phase((std::polar(1.0, 1.234) * v).eval());
  CHECK((a - b).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("compress reproduces matrix entries in the standard basis") {
  TestRng rng(9);
  const Matrix m = rng.hermitian(3);
  const Matrix c = compress(m, {ket(3, 0), ket(3, 1), ket(3, 2)});
  CHECK(max_abs(c - m) == 0.0);
}

}  // TEST_SUITE
