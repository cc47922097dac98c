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

#include "fracpow/operators.hpp"

#include <cmath>
#include <sstream>

#include "fracpow/expm.hpp"

namespace fracpow {

namespace {

// Solve (lambda + A) x = y for a dense A with one step of iterative
// refinement, and reject singular/inconsistent systems by residual.
Vector resolve_dense(const Matrix& a, Complex lambda, const Vector& y) {
  Matrix shifted = a;
  shifted.diagonal().array() += lambda;
  const auto lu = shifted.partialPivLu();
  Vector x = lu.solve(y);
  Vector r = y - shifted * x;
  x += lu.solve(r);
  r = y - shifted * x;
  const double yn = y.norm();
  if (!(r.norm() <= 1e-10 * (yn > 0.0 ? yn : 1.0)) || !x.allFinite()) {
    std::ostringstream os;
    os << "resolve: (lambda + A) is singular or severely ill-conditioned at "
       << "lambda = " << lambda;
    throw SolveError(os.str());
  }
  return x;
}

}  // namespace

double norm_of(const Vector& v, NormKind kind) {
  return kind == NormKind::kEuclidean ? v.norm()
                                      : v.lpNorm<Eigen::Infinity>();
}

Matrix Operator::dense_matrix() const {
  const Eigen::Index n = dim();
  Matrix a(n, n);
  Vector e = Vector::Zero(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    e(j) = 1.0;
    a.col(j) = apply(e);
    e(j) = 0.0;
  }
  return a;
}

std::string Operator::kind_name() const {
  switch (kind()) {
    case OperatorKind::kDenseMatrix: return "dense_matrix";
    case OperatorKind::kLaplacian1d: return "laplacian_1d";
    case OperatorKind::kMultiplication: return "multiplication";
  }
  return "unknown";
}

void Operator::check_dim(const Vector& x) const {
  if (x.size() != dim()) {
    std::ostringstream os;
    os << "dimension mismatch: operator dim " << dim() << ", vector dim "
       << x.size();
    throw DimensionError(os.str());
  }
}

// ---------------------------------------------------------------------------
// DenseOperator

DenseOperator::DenseOperator(Matrix a) : a_(std::move(a)) {
  if (a_.rows() != a_.cols() || a_.rows() == 0) {
    throw DimensionError("DenseOperator: matrix must be square and non-empty");
  }
  if (!a_.allFinite()) {
    throw DomainError("DenseOperator: matrix entries must be finite");
  }
}

Vector DenseOperator::apply(const Vector& x) const {
  check_dim(x);
  return a_ * x;
}

Vector DenseOperator::resolve(Complex lambda, const Vector& y) const {
  check_dim(y);
  return resolve_dense(a_, lambda, y);
}

Vector DenseOperator::semigroup(double r, const Vector& x) const {
  check_dim(x);
  if (r < 0.0) throw DomainError("semigroup: r must be >= 0");
  if (r == 0.0) return x;
  return matrix_exponential(-r * a_) * x;
}

// ---------------------------------------------------------------------------
// Laplacian1d

Laplacian1d::Laplacian1d(Eigen::Index n, double h) : n_(n), h_(h) {
  if (n < 1) throw DimensionError("Laplacian1d: need n >= 1");
  if (!(h > 0.0)) throw DomainError("Laplacian1d: need h > 0");
  const double inv_h2 = 1.0 / (h_ * h_);
  dense_ = Matrix::Zero(n_, n_);
  for (Eigen::Index i = 0; i < n_; ++i) {
    dense_(i, i) = 2.0 * inv_h2;
    if (i > 0) dense_(i, i - 1) = -inv_h2;
    if (i + 1 < n_) dense_(i, i + 1) = -inv_h2;
  }
}

Vector Laplacian1d::apply(const Vector& x) const {
  check_dim(x);
  const double inv_h2 = 1.0 / (h_ * h_);
  Vector y(n_);
  for (Eigen::Index i = 0; i < n_; ++i) {
    Complex v = 2.0 * x(i);
    if (i > 0) v -= x(i - 1);
    if (i + 1 < n_) v -= x(i + 1);
    y(i) = v * inv_h2;
  }
  return y;
}

Vector Laplacian1d::resolve(Complex lambda, const Vector& y) const {
  check_dim(y);
  // Thomas algorithm on (lambda + A): diag lambda + 2/h^2, off-diag -1/h^2.
  const double inv_h2 = 1.0 / (h_ * h_);
  const Complex diag = lambda + 2.0 * inv_h2;
  const Complex off = -inv_h2;
  Vector c(n_), d(n_);
  Complex denom = diag;
  if (std::abs(denom) < 1e-300) throw SolveError("resolve: singular tridiagonal system");
  c(0) = off / denom;
  d(0) = y(0) / denom;
  for (Eigen::Index i = 1; i < n_; ++i) {
    denom = diag - off * c(i - 1);
    if (std::abs(denom) < 1e-300) throw SolveError("resolve: singular tridiagonal system");
    c(i) = off / denom;
    d(i) = (y(i) - off * d(i - 1)) / denom;
  }
  Vector x(n_);
  x(n_ - 1) = d(n_ - 1);
  for (Eigen::Index i = n_ - 2; i >= 0; --i) x(i) = d(i) - c(i) * x(i + 1);
  return x;
}

Vector Laplacian1d::semigroup(double r, const Vector& x) const {
  check_dim(x);
  if (r < 0.0) throw DomainError("semigroup: r must be >= 0");
  if (r == 0.0) return x;
  return matrix_exponential(-r * dense_matrix()) * x;
}

Matrix Laplacian1d::dense_matrix() const { return dense_; }

// ---------------------------------------------------------------------------
// MultiplicationOperator

MultiplicationOperator::MultiplicationOperator(Vector symbol, double sector_angle,
                                               std::vector<double> points)
    : symbol_(std::move(symbol)), theta_(sector_angle), points_(std::move(points)) {
  if (symbol_.size() == 0) {
    throw DimensionError("MultiplicationOperator: empty symbol grid");
  }
  if (!(theta_ >= 0.0 && theta_ <= 1.5707963267948967)) {
    throw DomainError("MultiplicationOperator: sector angle must be in [0, pi/2]");
  }
  if (!points_.empty() && static_cast<Eigen::Index>(points_.size()) != symbol_.size()) {
    throw DimensionError("MultiplicationOperator: points/symbol length mismatch");
  }
  for (Eigen::Index i = 0; i < symbol_.size(); ++i) {
    const Complex f = symbol_(i);
    if (!std::isfinite(f.real()) || !std::isfinite(f.imag())) {
      throw DomainError("MultiplicationOperator: symbol values must be finite");
    }
    if (f == Complex(0.0, 0.0)) continue;
    if (std::abs(std::arg(f)) > theta_ + 1e-12) {
      std::ostringstream os;
      os << "MultiplicationOperator: symbol value " << f
         << " outside the sector |arg z| <= " << theta_;
      throw DomainError(os.str());
    }
  }
}

Vector MultiplicationOperator::apply(const Vector& x) const {
  check_dim(x);
  Vector y = symbol_.cwiseProduct(x);
  if (!y.allFinite()) throw DomainError("apply: product left C_b (non-finite value)");
  return y;
}

Vector MultiplicationOperator::resolve(Complex lambda, const Vector& y) const {
  check_dim(y);
  Vector x(symbol_.size());
  for (Eigen::Index i = 0; i < symbol_.size(); ++i) {
    const Complex denom = lambda + symbol_(i);
    if (std::abs(denom) < 1e-300) {
      std::ostringstream os;
      os << "resolve: -lambda hits the symbol range at sample " << i;
      throw SolveError(os.str());
    }
    x(i) = y(i) / denom;
  }
  return x;
}

Vector MultiplicationOperator::semigroup(double r, const Vector& x) const {
  check_dim(x);
  if (r < 0.0) throw DomainError("semigroup: r must be >= 0");
  Vector y(symbol_.size());
  for (Eigen::Index i = 0; i < symbol_.size(); ++i) {
    y(i) = std::exp(-r * symbol_(i)) * x(i);
  }
  return y;
}

// ---------------------------------------------------------------------------
// ShiftedOperator

ShiftedOperator::ShiftedOperator(const Operator& base, double eps)
    : base_(base), eps_(eps) {
  if (!(eps >= 0.0)) throw DomainError("ShiftedOperator: eps must be >= 0");
}

Vector ShiftedOperator::apply(const Vector& x) const {
  return base_.apply(x) + eps_ * x;
}

Vector ShiftedOperator::resolve(Complex lambda, const Vector& y) const {
  return base_.resolve(lambda + eps_, y);
}

Vector ShiftedOperator::semigroup(double r, const Vector& x) const {
  if (r < 0.0) throw DomainError("semigroup: r must be >= 0");
  return std::exp(-r * eps_) * base_.semigroup(r, x);
}

Matrix ShiftedOperator::dense_matrix() const {
  Matrix a = base_.dense_matrix();
  a.diagonal().array() += eps_;
  return a;
}

// ---------------------------------------------------------------------------
// Non-negativity validation

std::vector<double> default_lambda_grid() {
  std::vector<double> grid(40);
  for (int i = 0; i < 40; ++i) {
    grid[i] = std::pow(10.0, -4.0 + 8.0 * static_cast<double>(i) / 39.0);
  }
  return grid;
}

SectorReport validate_nonnegativity(const Operator& op,
                                    const std::vector<double>& lambda_grid) {
  if (lambda_grid.empty()) {
    throw DomainError("validate_nonnegativity: empty lambda grid");
  }
  if (op.dim() > 2000) {
    throw DimensionError("validate_nonnegativity: dim > 2000 not supported");
  }
  SectorReport report;
  report.sampled_lambdas = lambda_grid;
  report.norms.reserve(lambda_grid.size());

  const Eigen::Index n = op.dim();
  for (double lambda : lambda_grid) {
    if (!(lambda > 0.0)) {
      throw DomainError("validate_nonnegativity: grid must be strictly positive");
    }
    double norm = 0.0;
    try {
      if (op.kind() == OperatorKind::kMultiplication) {
        const auto& mult = static_cast<const MultiplicationOperator&>(op);
        for (Eigen::Index i = 0; i < n; ++i) {
          norm = std::max(norm, std::abs(lambda / (lambda + mult.symbol()(i))));
        }
      } else {
        // Assemble lambda (lambda + A)^{-1} column by column.
        Matrix res(n, n);
        Vector e = Vector::Zero(n);
        for (Eigen::Index j = 0; j < n; ++j) {
          e(j) = 1.0;
          res.col(j) = lambda * op.resolve(lambda, e);
          e(j) = 0.0;
        }
        if (op.norm_kind() == NormKind::kEuclidean) {
          norm = res.jacobiSvd().singularValues()(0);
        } else {
          norm = res.cwiseAbs().rowwise().sum().maxCoeff();
        }
      }
    } catch (const SolveError& e) {
      std::ostringstream os;
      os << "non-negativity violation: resolvent failed at lambda = " << lambda
         << " (" << e.what() << ")";
      throw SolveError(os.str());
    }
    report.norms.push_back(norm);
    report.grid_max = std::max(report.grid_max, norm);
  }
  report.clamped = report.grid_max < 1.0;
  report.m_estimate = std::max(1.0, report.grid_max);
  return report;
}

// ---------------------------------------------------------------------------
// Spectral oracle

Vector spectral_power_oracle(const Operator& op, const FractionalOrder& ord,
                             const Vector& x, double max_eigenbasis_cond) {
  if (x.size() != op.dim()) {
    throw DimensionError("spectral_power_oracle: dimension mismatch");
  }
  if (op.kind() == OperatorKind::kMultiplication) {
    const auto& mult = static_cast<const MultiplicationOperator&>(op);
    Vector y(op.dim());
    for (Eigen::Index i = 0; i < op.dim(); ++i) {
      const Complex f = mult.symbol()(i);
      y(i) = (f == Complex(0.0, 0.0)) ? Complex(0.0, 0.0)
                                      : principal_power(f, ord.alpha()) * x(i);
    }
    return y;
  }

  const Matrix a = op.dense_matrix();
  Eigen::ComplexEigenSolver<Matrix> es(a, /*computeEigenvectors=*/true);
  if (es.info() != Eigen::Success) {
    throw SolveError("spectral_power_oracle: eigendecomposition failed");
  }
  const Matrix& v = es.eigenvectors();
  const auto sv = v.jacobiSvd().singularValues();
  const double cond = sv(0) / sv(sv.size() - 1);
  if (!(cond <= max_eigenbasis_cond)) {
    std::ostringstream os;
    os << "spectral_power_oracle: eigenbasis condition " << cond
       << " exceeds limit " << max_eigenbasis_cond
       << " (operator treated as non-diagonalizable)";
    throw SolveError(os.str());
  }
  Vector coeffs = v.partialPivLu().solve(x);
  for (Eigen::Index i = 0; i < coeffs.size(); ++i) {
    const Complex lam = es.eigenvalues()(i);
    coeffs(i) *= (std::abs(lam) < 1e-14) ? Complex(0.0, 0.0)
                                         : principal_power(lam, ord.alpha());
  }
  return v * coeffs;
}

Matrix spectral_power_matrix(const Operator& op, const FractionalOrder& ord,
                             double max_eigenbasis_cond) {
  const Eigen::Index n = op.dim();
  Matrix m(n, n);
  Vector e = Vector::Zero(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    e(j) = 1.0;
    m.col(j) = spectral_power_oracle(op, ord, e, max_eigenbasis_cond);
    e(j) = 0.0;
  }
  return m;
}

}  // namespace fracpow
