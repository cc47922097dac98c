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
#include <random>

#include "fracpow/balakrishnan.hpp"

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

TEST_CASE("scalar balakrishnan identity") {
  const FractionalOrder half({0.5, 0.0});
  const QuadratureRule rule = balakrishnan_rule(half, 0.25, 1e-11, 2.0, 5.0);
  CHECK(std::abs(scalar_balakrishnan({1.0, 0.0}, half, rule) - 1.0) < 1e-8);
  CHECK(std::abs(scalar_balakrishnan({4.0, 0.0}, half, rule) - 2.0) < 1e-8);

  const FractionalOrder cplx({0.3, 0.2});
  const Complex z(2.0, 1.0);
  const ScalarPower p = scalar_fractional_power(z, cplx, 1e-10);
  CHECK(std::abs(p.value - principal_power(z, cplx.alpha())) <=
        1e-9 * std::abs(p.value));
  CHECK(p.est_error >= 0.0);
  CHECK(p.node_count_used > 0);

  CHECK_THROWS_AS(scalar_balakrishnan({-1.0, 0.0}, half, rule), DomainError);
}

TEST_CASE("balakrishnan_power examples") {
  SUBCASE("identity: 1^alpha = 1") {
    const DenseOperator id(Matrix::Identity(3, 3));
    const Vector x = vec({1.0, {0.5, -1.0}, {0.0, 2.0}});
    const PowerResult r = balakrishnan_power(id, FractionalOrder({0.7, 0.0}), x, 1e-9);
    CHECK((r.value - x).norm() <= 1e-8 * x.norm());
    CHECK(r.route == Route::kBalakrishnan);
  }

  SUBCASE("multiplication square roots") {
    const MultiplicationOperator mult(vec({1.0, 4.0, 9.0}), 0.0);
    const PowerResult r = balakrishnan_power(mult, FractionalOrder({0.5, 0.0}),
                                             vec({1.0, 1.0, 1.0}), 1e-9);
    CHECK(norm_of(r.value - vec({1.0, 2.0, 3.0}), NormKind::kSup) < 1e-8);
  }

  SUBCASE("nilpotent binomial truncation: (I+N)^alpha x = x + alpha N x") {
    Matrix j(2, 2);
    j << 1.0, 1.0, 0.0, 1.0;
    const DenseOperator jordan(j);
    const PowerResult r = balakrishnan_power(jordan, FractionalOrder({0.3, 0.0}),
                                             vec({0.0, 1.0}), 1e-10);
    CHECK((r.value - vec({0.3, 1.0})).norm() < 1e-8);
  }

  SUBCASE("kernel vectors map to zero") {
    const MultiplicationOperator mult(vec({0.0, 1.0}), 0.0);
    const PowerResult r = balakrishnan_power(mult, FractionalOrder({0.4, 0.0}),
                                             vec({1.0, 0.0}), 1e-9);
    CHECK(norm_of(r.value, NormKind::kSup) == 0.0);
  }
}

TEST_CASE("oracle equivalence on diagonalizable operators") {
  std::mt19937_64 rng(31);
  const DenseOperator dense = hermitian_op(32, 6);
  const Laplacian1d lap(6, 0.7);
  const MultiplicationOperator mult(vec({0.5, 2.0, {1.0, 0.8}}), 0.9);
  const std::vector<const Operator*> ops = {&dense, &lap, &mult};
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  for (const Operator* op : ops) {
    for (int rep = 0; rep < 6; ++rep) {
      const FractionalOrder ord(
          Complex(0.15 + 0.7 * u01(rng), -0.25 + 0.5 * u01(rng)));
      const Vector x = random_vector(rng, op->dim());
      const Vector ref = spectral_power_oracle(*op, ord, x);
      const PowerResult got = balakrishnan_power(*op, ord, x, 1e-8);
      CHECK(norm_of(got.value - ref, op->norm_kind()) <=
            1e-6 * norm_of(ref, op->norm_kind()));
    }
  }
}

TEST_CASE("power composition: A^a A^b = A^{a+b} for Re(a+b) < 1") {
  std::mt19937_64 rng(41);
  const DenseOperator dense = hermitian_op(42, 5);
  const MultiplicationOperator mult(vec({1.0, 4.0, 9.0}), 0.0);
  const std::vector<const Operator*> ops = {&dense, &mult};
  for (const Operator* op : ops) {
    const FractionalOrder a({0.35, 0.1});
    const FractionalOrder b({0.4, -0.15});
    const FractionalOrder ab(a.alpha() + b.alpha());
    const Vector x = random_vector(rng, op->dim());
    const Vector inner = balakrishnan_power(*op, b, x, 1e-10).value;
    const Vector nested = balakrishnan_power(*op, a, inner, 1e-10).value;
    const Vector direct = balakrishnan_power(*op, ab, x, 1e-10).value;
    CHECK(norm_of(nested - direct, op->norm_kind()) <=
          1e-6 * std::max(1.0, norm_of(direct, op->norm_kind())));
  }
}

TEST_CASE("commutation with the resolvent") {
  std::mt19937_64 rng(51);
  const DenseOperator op = hermitian_op(52, 6);
  const FractionalOrder ord({0.45, 0.2});
  const Vector x = random_vector(rng, 6);
  const Complex lambda(1.7, 0.0);
  const Vector lhs =
      balakrishnan_power(op, ord, op.resolve(lambda, x), 1e-11).value;
  const Vector rhs =
      op.resolve(lambda, balakrishnan_power(op, ord, x, 1e-11).value);
  CHECK((lhs - rhs).norm() <= 1e-8 * std::max(1.0, rhs.norm()));
}

TEST_CASE("shifted_power") {
  SUBCASE("identity converges to x quickly") {
    const DenseOperator id(Matrix::Identity(2, 2));
    const Vector x = vec({1.0, {0.0, -1.0}});
    const ShiftedPowerResult r =
        shifted_power(id, FractionalOrder({0.5, 0.0}), x);
    CHECK((r.power.value - x).norm() <= 4.0 * r.power.est_error + 1e-6);
    CHECK(r.power.route == Route::kShiftedLimit);
  }

  SUBCASE("symbol value 0 exercises 0 in sigma(A)") {
    const MultiplicationOperator mult(vec({0.0, 1.0}), 0.0);
    const ShiftedPowerResult r =
        shifted_power(mult, FractionalOrder({0.5, 0.0}), vec({1.0, 1.0}));
    // the eps-limit resolves (0,1) only to its own est_error scale
    CHECK(norm_of(r.power.value - vec({0.0, 1.0}), NormKind::kSup) <=
          4.0 * r.power.est_error);
    // decay toward the limit is eps^{Re alpha}, sharp at the zero symbol
    CHECK(r.fitted_eps_exponent == doctest::Approx(0.5).epsilon(0.15));
  }

  SUBCASE("limit agrees with the direct route within combined tolerance") {
    std::mt19937_64 rng(61);
    const DenseOperator dense = hermitian_op(62, 5);
    const Laplacian1d lap(6, 1.0);
    const MultiplicationOperator mult(vec({1.0, 4.0, 9.0}), 0.0);
    const std::vector<const Operator*> ops = {&dense, &lap, &mult};
    for (const Operator* op : ops) {
      const FractionalOrder ord({0.6, 0.0});
      const Vector x = random_vector(rng, op->dim());
      const ShiftedPowerResult shift = shifted_power(*op, ord, x);
      const PowerResult direct = balakrishnan_power(*op, ord, x, 1e-10);
      CHECK(norm_of(shift.power.value - direct.value, op->norm_kind()) <=
            4.0 * shift.power.est_error + 1e-8);
    }
  }

  SUBCASE("decay exponent consistent with the eps^{Re alpha} sector bound") {
    // Symbols bounded away from 0 shrink like eps^1; the bound only requires
    // the fit to stay above Re alpha - 0.1.
    const MultiplicationOperator mult(vec({1.0, 4.0, 9.0}), 0.0);
    const ShiftedPowerResult r =
        shifted_power(mult, FractionalOrder({0.3, 0.0}), vec({1.0, 1.0, 1.0}));
    CHECK(r.fitted_eps_exponent >= 0.3 - 0.1);
  }

  SUBCASE("stagnation above tol raises") {
    const MultiplicationOperator mult(vec({0.0, 1.0}), 0.0);
    const std::vector<double> eps = {0.25, 0.125, 0.0625};
    CHECK_THROWS_AS(shifted_power(mult, FractionalOrder({0.5, 0.0}),
                                  vec({1.0, 1.0}), eps, 1e-8),
                    ConvergenceError);
  }

  SUBCASE("eps sequence validation") {
    const DenseOperator id(Matrix::Identity(2, 2));
    CHECK_THROWS_AS(shifted_power(id, FractionalOrder({0.5, 0.0}),
                                  vec({1.0, 1.0}), {0.1, 0.2}, 1e-2),
                    DomainError);
  }
}
