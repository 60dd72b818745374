#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "repstrata/linalg.hpp"
#include "repstrata/quaternion.hpp"

using namespace repstrata;

TEST_CASE("zero and identity ranks") {
  const Matrix zero = Matrix::Zero(3, 6);
  const RankReport r0 = numeric_rank(zero);
  CHECK(r0.rank == 0);
  CHECK(kernel_basis(zero).cols() == 6);

  const Matrix id = Matrix::Identity(4, 4);
  CHECK(numeric_rank(id).rank == 4);
  CHECK(kernel_basis(id).cols() == 0);
}

TEST_CASE("construction-pinned rank") {
  Rng rng(7);
  for (int n = 0; n < 20; ++n) {
    Matrix a(6, 2), b(2, 6);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 2; ++j) {
        a(i, j) = rng.normal();
        b(j, i) = rng.normal();
      }
    const Matrix m = a * b;
    const RankReport r = numeric_rank(m);
    CHECK(r.rank == 2);
    CHECK(r.gap > 1e6);
  }
}

TEST_CASE("kernel basis is orthonormal with small residual") {
  Rng rng(8);
  Matrix a(4, 2), b(2, 7);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 2; ++j) a(i, j) = rng.normal();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 7; ++j) b(i, j) = rng.normal();
  const Matrix m = a * b;
  const double tol = 1e-8;
  const Matrix k = kernel_basis(m, tol);
  CHECK(k.cols() == 5);
  const Matrix gram = k.transpose() * k;
  CHECK((gram - Matrix::Identity(5, 5)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((m * k).cwiseAbs().maxCoeff() <= 10 * tol);
}

TEST_CASE("empty matrices are rejected") {
  CHECK_THROWS_AS(numeric_rank(Matrix(0, 3)), std::invalid_argument);
  CHECK_THROWS_AS(kernel_basis(Matrix(3, 0)), std::invalid_argument);
  CHECK_THROWS_AS(numeric_rank(Matrix(2, 2), -1.0), std::invalid_argument);
}

TEST_CASE("complement within a span") {
  Matrix outer = Matrix::Zero(5, 3);
  outer(0, 0) = 1;
  outer(1, 1) = 1;
  outer(2, 2) = 1;
  Matrix inner = Matrix::Zero(5, 1);
  inner(0, 0) = 1;
  const Matrix comp = complement_within(inner, outer);
  CHECK(comp.cols() == 2);
  CHECK((inner.transpose() * comp).cwiseAbs().maxCoeff() < 1e-12);
}
