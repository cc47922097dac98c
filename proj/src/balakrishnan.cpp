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

#include "fracpow/balakrishnan.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "node_cache.hpp"

namespace fracpow {

namespace {

constexpr std::size_t kNodeCap = 1 << 14;
constexpr double kInitialStep = 0.5;
constexpr int kMaxLevels = 8;

double truncation_tol(double tol) {
  // Truncated tails should stay well below the doubling acceptance test.
  return std::max(1e-300, 1e-3 * tol);
}

}  // namespace

const char* route_name(Route route) {
  switch (route) {
    case Route::kBalakrishnan: return "balakrishnan";
    case Route::kShiftedLimit: return "shifted_limit";
    case Route::kSpectralOracle: return "spectral_oracle";
    case Route::kDtn: return "dtn";
  }
  return "unknown";
}

Complex scalar_balakrishnan(Complex z, const FractionalOrder& ord,
                            const QuadratureRule& rule) {
  if (z.imag() == 0.0 && z.real() <= 0.0) {
    std::ostringstream os;
    os << "scalar_balakrishnan: z = " << z << " violates |arg z| < pi";
    throw DomainError(os.str());
  }
  const Complex sum = pairwise_sum<Complex>(
      rule.node_count(), [&](std::size_t j) {
        return rule.weights[j] * (z / (rule.nodes[j] + z));
      });
  return ord.sin_pi_alpha() / std::numbers::pi * sum;
}

ScalarPower scalar_fractional_power(Complex z, const FractionalOrder& ord,
                                    double tol) {
  const double trunc = truncation_tol(tol);
  ScalarPower out;
  Complex prev;
  bool have_prev = false;
  double step = kInitialStep;
  for (int level = 0; level < kMaxLevels; ++level, step *= 0.5) {
    QuadratureRule rule = balakrishnan_rule(ord, step, trunc, 2.0, std::abs(z) + 1.0);
    if (rule.node_count() > kNodeCap) break;
    const Complex value = scalar_balakrishnan(z, ord, rule);
    if (have_prev) {
      out.est_error = std::abs(value - prev);
      if (out.est_error <= tol * std::max(1.0, std::abs(value))) {
        out.value = value;
        out.node_count_used = static_cast<int>(rule.node_count());
        return out;
      }
    }
    prev = value;
    have_prev = true;
    out.node_count_used = static_cast<int>(rule.node_count());
  }
  std::ostringstream os;
  os << "scalar_fractional_power: node cap reached before tolerance " << tol;
  throw ConvergenceError(os.str());
}

PowerResult balakrishnan_power(const Operator& op, const FractionalOrder& ord,
                               const Vector& x, double tol, ExecPolicy policy) {
  PowerResult out;
  out.route = Route::kBalakrishnan;

  const Vector ax = op.apply(x);
  const NormKind nk = op.norm_kind();
  const double x_norm = norm_of(x, nk);
  const double ax_norm = norm_of(ax, nk);
  if (ax_norm == 0.0) {
    // x in ker A: the integrand vanishes identically, A^alpha x = 0.
    out.value = Vector::Zero(x.size());
    return out;
  }

  const double m_bound = std::max(1.0, op.nonneg_constant_estimate().value_or(1.0));
  const double scale_left = 2.0 * (1.0 + m_bound) * std::max(x_norm, 1e-300);
  const double scale_right = 2.0 * m_bound * ax_norm;
  const double ref_scale = std::max(x_norm, ax_norm);
  const double trunc = truncation_tol(tol) * ref_scale;
  const Complex prefactor = ord.sin_pi_alpha() / std::numbers::pi;

  Vector prev;
  bool have_prev = false;
  // Resolvent solves on the dyadic u-grid; levels nest under step halving.
  detail::NodeCache cache;
  double step = kInitialStep;
  for (int level = 0; level < kMaxLevels; ++level, step *= 0.5) {
    if (level > 0) cache.halve_step();
    QuadratureRule rule = balakrishnan_rule(ord, step, trunc, scale_left, scale_right);
    const std::size_t n = rule.node_count();
    if (n > kNodeCap) break;

    cache.ensure(rule.first_index, rule.first_index + static_cast<long>(n) - 1,
                 step, [&](double u) { return op.resolve(std::exp(u), ax); },
                 policy);
    Vector value = prefactor *
        pairwise_sum<Vector>(n, [&](std::size_t j) {
          return rule.weights[j] * cache.at(rule.first_index + static_cast<long>(j));
        });

    if (have_prev) {
      out.est_error = norm_of(value - prev, nk);
      if (out.est_error <= tol * std::max(norm_of(value, nk), x_norm)) {
        out.value = std::move(value);
        out.node_count_used = static_cast<int>(n);
        return out;
      }
    }
    prev = std::move(value);
    have_prev = true;
    out.node_count_used = static_cast<int>(n);
  }
  std::ostringstream os;
  os << "balakrishnan_power: node cap " << kNodeCap
     << " reached before tolerance " << tol;
  throw ConvergenceError(os.str());
}

std::vector<double> default_eps_sequence() {
  std::vector<double> eps;
  for (int j = 2; j <= 12; ++j) eps.push_back(std::ldexp(1.0, -j));
  return eps;
}

ShiftedPowerResult shifted_power(const Operator& op, const FractionalOrder& ord,
                                 const Vector& x,
                                 const std::vector<double>& eps_sequence,
                                 double tol, ExecPolicy policy) {
  if (eps_sequence.size() < 2) {
    throw DomainError("shifted_power: need at least two shifts");
  }
  for (std::size_t i = 0; i + 1 < eps_sequence.size(); ++i) {
    if (!(eps_sequence[i] > eps_sequence[i + 1]) || !(eps_sequence.back() > 0.0)) {
      throw DomainError("shifted_power: eps_sequence must decrease to 0");
    }
  }

  const NormKind nk = op.norm_kind();
  const double x_norm = norm_of(x, nk);
  const double inner_tol = std::min(1e-9, 1e-3 * tol);

  ShiftedPowerResult out;
  out.power.route = Route::kShiftedLimit;
  std::vector<Vector> values;
  bool converged = false;
  for (double eps : eps_sequence) {
    const ShiftedOperator shifted(op, eps);
    PowerResult r = balakrishnan_power(shifted, ord, x, inner_tol, policy);
    values.push_back(std::move(r.value));
    out.eps_used.push_back(eps);
    out.power.node_count_used = r.node_count_used;
    if (values.size() >= 2) {
      const double diff =
          norm_of(values.back() - values[values.size() - 2], nk);
      out.power.est_error = diff;
      if (diff <= tol * std::max(norm_of(values.back(), nk), x_norm)) {
        converged = true;
        break;
      }
    }
  }
  if (!converged) {
    std::ostringstream os;
    os << "shifted_power: differences stagnate above tol = " << tol
       << " (last = " << out.power.est_error << ")";
    throw ConvergenceError(os.str());
  }
  out.power.value = values.back();

  // Decay-exponent fit of ||(A+eps)^alpha x - limit|| against eps, using
  // shifts safely above the declared limit's own resolution.
  std::vector<double> log_eps, log_gap;
  out.gaps.resize(values.size(), 0.0);
  for (std::size_t j = 0; j + 1 < values.size(); ++j) {
    const double gap = norm_of(values[j] - out.power.value, nk);
    out.gaps[j] = gap;
    if (gap > std::max(4.0 * out.power.est_error, 1e3 * inner_tol * x_norm)) {
      log_eps.push_back(std::log(out.eps_used[j]));
      log_gap.push_back(std::log(gap));
    }
  }
  if (log_eps.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(log_eps.size());
    for (std::size_t i = 0; i < log_eps.size(); ++i) {
      sx += log_eps[i];
      sy += log_gap[i];
      sxx += log_eps[i] * log_eps[i];
      sxy += log_eps[i] * log_gap[i];
    }
    out.fitted_eps_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  } else {
    out.fitted_eps_exponent = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

}  // namespace fracpow
