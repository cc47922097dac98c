// Copyright 2026 The fracpow Authors
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
#include <numbers>
#include <random>

#include "fracpow/expm.hpp"
#include "fracpow/operators.hpp"

using namespace fracpow;

namespace {

Vector vec(std::initializer_list<Complex> values) {
  Vector v(static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (Complex z : values) v(i++) = z;
  return v;
}

Vector random_vector(std::mt19937_64& rng, Eigen::Index n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vector x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = Complex(u(rng), u(rng));
  return x;
}

DenseOperator hermitian_op(unsigned seed, Eigen::Index n) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Matrix b(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) b(i, j) = Complex(u(rng), u(rng));
  Matrix a = b * b.adjoint() / static_cast<double>(n);
  a.diagonal().array() += 0.1;
  return DenseOperator(std::move(a));
}

}  // namespace

TEST_CASE("apply on the three kinds") {
  const DenseOperator id(Matrix::Identity(3, 3));
  const Vector x = vec({{1.0, 2.0}, {-0.5, 0.0}, {0.0, 1.0}});
  CHECK((id.apply(x) - x).norm() == 0.0);

  const Laplacian1d lap(3, 1.0);
  const Vector y = lap.apply(vec({1.0, 0.0, 0.0}));
  CHECK((y - vec({2.0, -1.0, 0.0})).norm() < 1e-15);

  const MultiplicationOperator mult(vec({1.0, 4.0, 9.0}), 0.0);
  CHECK((mult.apply(vec({1.0, 1.0, 1.0})) - vec({1.0, 4.0, 9.0})).norm() < 1e-15);

  CHECK_THROWS_AS(lap.apply(vec({1.0, 0.0})), DimensionError);
}

TEST_CASE("resolve: hand-solved cases and residuals") {
  const DenseOperator id(Matrix::Identity(2, 2));
  const Vector y = vec({3.0, {0.0, 1.0}});
  CHECK((id.resolve(1.0, y) - 0.5 * y).norm() < 1e-14);

  const MultiplicationOperator mult(vec({1.0, 4.0, 9.0}), 0.0);
  const Vector r = mult.resolve(1.0, vec({1.0, 1.0, 1.0}));
  CHECK((r - vec({0.5, 0.2, 0.1})).norm() < 1e-15);

  // (1 + A) x = e1 for the n=3 unit-spacing Laplacian: tridiag(-1,3,-1),
  // eliminated by hand: x = (8/21, 1/7, 1/21).
  const Laplacian1d lap(3, 1.0);
  const Vector x = lap.resolve(1.0, vec({1.0, 0.0, 0.0}));
  CHECK((x - vec({8.0 / 21.0, 1.0 / 7.0, 1.0 / 21.0})).norm() < 1e-14);

  // residual contract on a random system
  std::mt19937_64 rng(11);
  const DenseOperator op = hermitian_op(12, 6);
  const Vector b = random_vector(rng, 6);
  const Complex lambda(0.37, 0.0);
  const Vector sol = op.resolve(lambda, b);
  Matrix shifted = op.dense_matrix();
  shifted.diagonal().array() += lambda;
  CHECK((shifted * sol - b).norm() <= 1e-10 * b.norm());

  // -lambda in the symbol range is singular
  CHECK_THROWS_AS(mult.resolve(-4.0, vec({1.0, 1.0, 1.0})), SolveError);
}

TEST_CASE("semigroup values") {
  const MultiplicationOperator mult(vec({1.0, 2.0}), 0.0);
  const Vector x = vec({1.0, 1.0});
  CHECK((mult.semigroup(0.0, x) - x).norm() == 0.0);
  const Vector tx = mult.semigroup(std::log(2.0), x);
  CHECK((tx - vec({0.5, 0.25})).norm() < 1e-14);

  // Jordan block: e^{-r(I+N)} = e^{-r} (I - r N)
  Matrix j(2, 2);
  j << 1.0, 1.0, 0.0, 1.0;
  const DenseOperator jordan(j);
  const Vector jx = jordan.semigroup(1.0, vec({0.0, 1.0}));
  const double e1 = std::exp(-1.0);
  CHECK((jx - vec({-e1, e1})).norm() < 1e-14);

  CHECK_THROWS_AS(jordan.semigroup(-0.5, vec({0.0, 1.0})), DomainError);
}

TEST_CASE("matrix exponential sanity") {
  // large-norm input exercises scaling and squaring
  std::mt19937_64 rng(13);
  Matrix a(4, 4);
  for (Eigen::Index i = 0; i < 4; ++i)
    for (Eigen::Index j = 0; j < 4; ++j)
      a(i, j) = Complex(3.0 * std::uniform_real_distribution<double>(-1, 1)(rng),
                        3.0 * std::uniform_real_distribution<double>(-1, 1)(rng));
  const Matrix e = matrix_exponential(a);
  const Matrix e_half = matrix_exponential(0.5 * a);
  CHECK((e - e_half * e_half).norm() <= 1e-12 * e.norm());
  CHECK((matrix_exponential(Matrix::Zero(3, 3)) - Matrix::Identity(3, 3)).norm() == 0.0);
}

TEST_CASE("operator properties") {
  std::mt19937_64 rng(17);
  const DenseOperator dense = hermitian_op(18, 6);
  const Laplacian1d lap(8, 1.0);
  const MultiplicationOperator mult(vec({1.0, 4.0, 9.0}), 0.0);
  const std::vector<const Operator*> ops = {&dense, &lap, &mult};

  SUBCASE("resolvent identity") {
    for (const Operator* op : ops) {
      const Vector x = random_vector(rng, op->dim());
      const Complex l1(0.7, 0.0), l2(2.3, 0.0);
      const Vector lhs = op->resolve(l1, x) - op->resolve(l2, x);
      const Vector rhs = (l2 - l1) * op->resolve(l1, op->resolve(l2, x));
      CHECK(norm_of(lhs - rhs, op->norm_kind()) <=
            1e-9 * norm_of(x, op->norm_kind()));
    }
  }

  SUBCASE("approximation of identity") {
    for (const Operator* op : ops) {
      const double m = validate_nonnegativity(*op).m_estimate;
      const Vector x = random_vector(rng, op->dim());
      const Vector ax = op->apply(x);
      for (double n : {10.0, 100.0, 1000.0}) {
        const Vector nx = n * op->resolve(n, x);
        CHECK(norm_of(nx - x, op->norm_kind()) <=
              (1.0 + 1e-6) * m * norm_of(ax, op->norm_kind()) / n);
      }
    }
  }

  SUBCASE("semigroup law") {
    for (const Operator* op : ops) {
      const Vector x = random_vector(rng, op->dim());
      const Vector both = op->semigroup(0.7 + 0.4, x);
      const Vector nested = op->semigroup(0.7, op->semigroup(0.4, x));
      CHECK(norm_of(both - nested, op->norm_kind()) <=
            1e-9 * norm_of(x, op->norm_kind()));
    }
  }

  SUBCASE("bounded orbit") {
    for (const Operator* op : ops) {
      const double m = validate_nonnegativity(*op).m_estimate;
      const Vector x = random_vector(rng, op->dim());
      for (double r = 0.01; r < 100.0; r *= 3.0) {
        CHECK(norm_of(op->semigroup(r, x), op->norm_kind()) <=
              (m + 1e-6) * norm_of(x, op->norm_kind()));
      }
    }
  }
}

TEST_CASE("validate_nonnegativity") {
  SUBCASE("identity clamps to M = 1") {
    const DenseOperator id(Matrix::Identity(3, 3));
    const SectorReport rep = validate_nonnegativity(id);
    for (std::size_t i = 0; i < rep.norms.size(); ++i) {
      const double l = rep.sampled_lambdas[i];
      CHECK(rep.norms[i] == doctest::Approx(l / (l + 1.0)).epsilon(1e-9));
      CHECK(rep.norms[i] < 1.0);
    }
    CHECK(rep.clamped);
    CHECK(rep.m_estimate == 1.0);
  }

  SUBCASE("purely imaginary symbol stays bounded") {
    const MultiplicationOperator mult(vec({{0.0, 1.0}}), 1.5707963267948966);
    const SectorReport rep = validate_nonnegativity(mult);
    for (std::size_t i = 0; i < rep.norms.size(); ++i) {
      const double l = rep.sampled_lambdas[i];
      CHECK(rep.norms[i] ==
            doctest::Approx(l / std::abs(Complex(l, 1.0))).epsilon(1e-9));
    }
    CHECK(rep.m_estimate >= 1.0 - 1e-9);
  }

  SUBCASE("nilpotent block: 0 in the spectrum is allowed, grid max finite") {
    Matrix n2(2, 2);
    n2 << 0.0, 1.0, 0.0, 0.0;
    const SectorReport rep = validate_nonnegativity(DenseOperator(n2));
    CHECK(std::isfinite(rep.grid_max));
    CHECK(rep.grid_max > 1.0);  // blows up as lambda -> 0; finite on the grid
  }

  SUBCASE("grid validation") {
    const DenseOperator id(Matrix::Identity(2, 2));
    CHECK_THROWS_AS(validate_nonnegativity(id, {}), DomainError);
    CHECK_THROWS_AS(validate_nonnegativity(id, {1.0, -2.0}), DomainError);
  }
}

TEST_CASE("spectral_power_oracle") {
  const FractionalOrder half({0.5, 0.0});

  const MultiplicationOperator mult(vec({1.0, 4.0, 9.0}), 0.0);
  CHECK((spectral_power_oracle(mult, half, vec({1.0, 1.0, 1.0})) -
         vec({1.0, 2.0, 3.0}))
            .norm() < 1e-14);

  const DenseOperator id(Matrix::Identity(3, 3));
  const Vector x = vec({1.0, {0.0, 2.0}, -0.5});
  CHECK((spectral_power_oracle(id, FractionalOrder({0.3, 0.2}), x) - x).norm() <
        1e-12);

  // n=3 unit-spacing Laplacian: eigenvalues 2 - 2 cos(k pi / 4) with
  // eigenvectors sin(j k pi / 4); build A^{1/2} e1 from those pairs.
  const Laplacian1d lap(3, 1.0);
  Vector expected = Vector::Zero(3);
  for (int k = 1; k <= 3; ++k) {
    const double lam = 2.0 - 2.0 * std::cos(k * std::numbers::pi / 4.0);
    Vector v(3);
    for (int j = 1; j <= 3; ++j) v(j - 1) = std::sin(j * k * std::numbers::pi / 4.0);
    expected += std::sqrt(lam) * v(0) * v / v.squaredNorm();
  }
  const Vector got = spectral_power_oracle(lap, half, vec({1.0, 0.0, 0.0}));
  CHECK((got - expected).norm() < 1e-12);

  // the oracle refuses non-diagonalizable input
  Matrix j(2, 2);
  j << 1.0, 1.0, 0.0, 1.0;
  CHECK_THROWS_AS(spectral_power_oracle(DenseOperator(j), half, vec({0.0, 1.0})),
                  SolveError);
}

TEST_CASE("shifted operator view") {
  std::mt19937_64 rng(23);
  const DenseOperator base = hermitian_op(24, 5);
  const double eps = 0.125;
  const ShiftedOperator shifted(base, eps);
  Matrix expected = base.dense_matrix();
  expected.diagonal().array() += eps;
  const DenseOperator direct(expected);

  const Vector x = random_vector(rng, 5);
  CHECK((shifted.apply(x) - direct.apply(x)).norm() < 1e-13);
  CHECK((shifted.resolve({0.9, 0.1}, x) - direct.resolve({0.9, 0.1}, x)).norm() <
        1e-12);
  CHECK((shifted.semigroup(0.8, x) - direct.semigroup(0.8, x)).norm() < 1e-12);
  CHECK((shifted.dense_matrix() - expected).norm() == 0.0);
}

TEST_CASE("multiplication operator sector invariant") {
  CHECK_THROWS_AS(MultiplicationOperator(vec({{-1.0, 0.1}}), 0.5), DomainError);
  CHECK_NOTHROW(MultiplicationOperator(vec({{0.0, 0.0}, {1.0, 1.0}}), 0.8));
}
