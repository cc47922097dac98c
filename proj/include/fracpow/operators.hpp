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

#pragma once

#include <Eigen/Dense>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fracpow/special_functions.hpp"

namespace fracpow {

using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

enum class OperatorKind { kDenseMatrix, kLaplacian1d, kMultiplication };

/// Which norm the operator's underlying space carries.  Multiplication
/// operators model C_b on a sample grid and use the sup norm; matrix
/// operators use the Euclidean norm.
enum class NormKind { kEuclidean, kSup };

double norm_of(const Vector& v, NormKind kind);

/// A non-negative linear operator A given by a concrete finite realization.
/// Implementations are immutable after construction and safe to share
/// across threads; all operations are reentrant.
class Operator {
 public:
  virtual ~Operator() = default;

  virtual OperatorKind kind() const = 0;
  virtual NormKind norm_kind() const = 0;
  virtual Eigen::Index dim() const = 0;

  /// A x.
  virtual Vector apply(const Vector& x) const = 0;

  /// Solves (lambda + A) x = y.  Residual is kept at solver working
  /// precision (<= 1e-10 ||y|| for the shipped realizations).
  virtual Vector resolve(Complex lambda, const Vector& y) const = 0;

  /// Semigroup action e^{-rA} x for r >= 0.
  virtual Vector semigroup(double r, const Vector& x) const = 0;

  /// Dense representation (assembled on demand); used by the matrix
  /// exponential and the spectral oracle.
  virtual Matrix dense_matrix() const;

  /// Empirical non-negativity constant from a previous validation run, if
  /// one was recorded at construction time.
  std::optional<double> nonneg_constant_estimate() const { return m_estimate_; }

  std::string kind_name() const;

 protected:
  void check_dim(const Vector& x) const;
  std::optional<double> m_estimate_;
};

/// Dense complex matrix operator on C^n with the Euclidean norm.
class DenseOperator final : public Operator {
 public:
  explicit DenseOperator(Matrix a);

  OperatorKind kind() const override { return OperatorKind::kDenseMatrix; }
  NormKind norm_kind() const override { return NormKind::kEuclidean; }
  Eigen::Index dim() const override { return a_.rows(); }
  Vector apply(const Vector& x) const override;
  Vector resolve(Complex lambda, const Vector& y) const override;
  Vector semigroup(double r, const Vector& x) const override;
  Matrix dense_matrix() const override { return a_; }

 private:
  Matrix a_;
};

/// 1-D Dirichlet Laplacian on n interior points with spacing h:
/// (A x)_i = (2 x_i - x_{i-1} - x_{i+1}) / h^2.
class Laplacian1d final : public Operator {
 public:
  Laplacian1d(Eigen::Index n, double h);

  OperatorKind kind() const override { return OperatorKind::kLaplacian1d; }
  NormKind norm_kind() const override { return NormKind::kEuclidean; }
  Eigen::Index dim() const override { return n_; }
  Vector apply(const Vector& x) const override;
  Vector resolve(Complex lambda, const Vector& y) const override;
  Vector semigroup(double r, const Vector& x) const override;
  Matrix dense_matrix() const override;

  double spacing() const { return h_; }

 private:
  Eigen::Index n_;
  double h_;
  Matrix dense_;  // assembled once; semigroup exponentiates -r * dense_
};

/// Multiplication operator (A g)(x_i) = f(x_i) g(x_i) on a sample grid,
/// modeling the C_b multiplication example; carries the sup norm.  All
/// symbol values must lie in the closed sector |arg z| <= theta (or be 0).
class MultiplicationOperator final : public Operator {
 public:
  explicit MultiplicationOperator(Vector symbol, double sector_angle = 1.5707963267948966,
                                  std::vector<double> points = {});

  OperatorKind kind() const override { return OperatorKind::kMultiplication; }
  NormKind norm_kind() const override { return NormKind::kSup; }
  Eigen::Index dim() const override { return symbol_.size(); }
  Vector apply(const Vector& x) const override;
  Vector resolve(Complex lambda, const Vector& y) const override;
  Vector semigroup(double r, const Vector& x) const override;
  Matrix dense_matrix() const override { return symbol_.asDiagonal(); }

  const Vector& symbol() const { return symbol_; }
  double sector_angle() const { return theta_; }
  const std::vector<double>& points() const { return points_; }

 private:
  Vector symbol_;
  double theta_;
  std::vector<double> points_;
};

/// View of A + eps used by the shifted-power limit; delegates to the base
/// operator ((lambda + eps + A)^{-1}, e^{-r eps} e^{-rA}).
class ShiftedOperator final : public Operator {
 public:
  ShiftedOperator(const Operator& base, double eps);

  OperatorKind kind() const override { return base_.kind(); }
  NormKind norm_kind() const override { return base_.norm_kind(); }
  Eigen::Index dim() const override { return base_.dim(); }
  Vector apply(const Vector& x) const override;
  Vector resolve(Complex lambda, const Vector& y) const override;
  Vector semigroup(double r, const Vector& x) const override;
  Matrix dense_matrix() const override;

 private:
  const Operator& base_;
  double eps_;
};

/// Per-lambda resolvent norms ||lambda (lambda + A)^{-1}|| sampled over a
/// positive grid, and the resulting estimate of the non-negativity
/// constant M = sup_{lambda>0} of that quantity.  The true M is always
/// >= 1; a finite grid can only approach that from below (the sup may be
/// attained in a lambda -> 0/infinity limit), so m_estimate clamps the
/// grid maximum up to 1 and `clamped` records when that happened.
struct SectorReport {
  std::vector<double> sampled_lambdas;
  std::vector<double> norms;
  double grid_max = 0.0;
  double m_estimate = 1.0;  // max(1, grid_max)
  bool clamped = false;
};

/// Default validation grid: 40 log-spaced points in [1e-4, 1e4].
std::vector<double> default_lambda_grid();

/// Samples ||lambda (lambda+A)^{-1}|| over the grid (exact singular-value
/// norm for Euclidean operators, max-entry/row logic for sup-norm ones).
/// A resolvent failure at some lambda is reported as a non-negativity
/// violation (SolveError).  Requires dim <= 2000.
SectorReport validate_nonnegativity(const Operator& op,
                                    const std::vector<double>& lambda_grid =
                                        default_lambda_grid());

/// Independent reference route for A^alpha x through an eigendecomposition:
/// V diag(lambda_i^alpha) V^{-1} x, with 0^alpha := 0.  Multiplication
/// operators evaluate pointwise.  Dense operators must pass an eigenvector
/// conditioning check (cond(V) <= 1e6); the oracle refuses rather than
/// degrade.
Vector spectral_power_oracle(const Operator& op, const FractionalOrder& ord,
                             const Vector& x, double max_eigenbasis_cond = 1e6);

/// A^alpha as a dense matrix via the spectral route (oracle applied to the
/// canonical basis).
Matrix spectral_power_matrix(const Operator& op, const FractionalOrder& ord,
                             double max_eigenbasis_cond = 1e6);

}  // namespace fracpow
