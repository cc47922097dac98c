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

#include "fracpow/extension.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "fracpow/quadrature.hpp"
#include "node_cache.hpp"

namespace fracpow {

namespace {

constexpr std::size_t kNodeCap = 1 << 14;
constexpr double kInitialStep = 0.5;
constexpr int kMaxLevels = 8;

// Gamma(re)/|Gamma(alpha)|, the natural magnitude of the k-th weight moment.
double moment_scale(const FractionalOrder& ord, int k) {
  const double g = std::tgamma(ord.re() + static_cast<double>(k));
  return g / std::abs(ord.gamma_alpha());
}

// Evaluates the subordination moments
//   I_k(t) = (1/Gamma(alpha)) int_0^infty s^{alpha+k-1} e^{-s} T(t^2/(4s)) x ds
// for all k in `ks` (ascending) on one shared semigroup node set, with
// adaptive step halving.  The semigroup factor is evaluated once per node.
std::vector<Evaluated> subordination_moments(const Operator& op,
                                             const FractionalOrder& ord,
                                             const Vector& x, double t,
                                             const std::vector<int>& ks,
                                             double tol, ExecPolicy policy) {
  const NormKind nk = op.norm_kind();
  const double x_norm = norm_of(x, nk);
  const double trunc = std::max(1e-300, 1e-3 * tol);

  std::vector<Evaluated> out(ks.size());
  std::vector<Vector> prev(ks.size());
  bool have_prev = false;

  // Semigroup values T(t^2/(4 e^w)) x on the dyadic w-grid; levels nest, so
  // halving the step recomputes only the odd-index nodes.
  detail::NodeCache cache;

  double step = kInitialStep;
  for (int level = 0; level < kMaxLevels; ++level, step *= 0.5) {
    if (level > 0) cache.halve_step();
    std::vector<QuadratureRule> rules;
    rules.reserve(ks.size());
    for (int k : ks) rules.push_back(gamma_weighted_rule(ord, k, step, trunc));

    long jmin = rules.front().first_index;
    long jmax = jmin;
    for (const auto& r : rules) {
      jmin = std::min(jmin, r.first_index);
      jmax = std::max(jmax, r.first_index + static_cast<long>(r.node_count()) - 1);
    }
    const std::size_t n_union = static_cast<std::size_t>(jmax - jmin + 1);
    if (n_union > kNodeCap) break;

    cache.ensure(jmin, jmax, step, [&](double w) {
      return op.semigroup(t * t / (4.0 * std::exp(w)), x);
    }, policy);

    bool all_ok = have_prev;
    for (std::size_t q = 0; q < ks.size(); ++q) {
      const QuadratureRule& rule = rules[q];
      Vector value = pairwise_sum<Vector>(rule.node_count(), [&](std::size_t j) {
        return rule.weights[j] * cache.at(rule.first_index + static_cast<long>(j));
      });
      if (have_prev) {
        const double diff = norm_of(value - prev[q], nk);
        out[q].est_error = diff;
        const double scale =
            std::max(norm_of(value, nk), x_norm * moment_scale(ord, ks[q]));
        if (diff > tol * scale) all_ok = false;
      }
      out[q].node_count = static_cast<int>(rule.node_count());
      prev[q] = std::move(value);
    }
    if (all_ok) {
      for (std::size_t q = 0; q < ks.size(); ++q) out[q].value = std::move(prev[q]);
      return out;
    }
    have_prev = true;
  }
  std::ostringstream os;
  os << "extension quadrature: node cap " << kNodeCap
     << " reached before tolerance " << tol << " at t = " << t;
  throw ConvergenceError(os.str());
}

struct DerivativeParts {
  Evaluated u;     // I_0 = U(t) x
  Evaluated du;    // U'(t) x
};

DerivativeParts derivative_parts(const Operator& op, const FractionalOrder& ord,
                                 const Vector& x, double t, double tol,
                                 ExecPolicy policy) {
  auto moments = subordination_moments(op, ord, x, t, {0, 1}, tol, policy);
  const Complex alpha = ord.alpha();
  DerivativeParts parts;
  parts.u = std::move(moments[0]);
  parts.du.value = (2.0 * alpha / t) * parts.u.value - (2.0 / t) * moments[1].value;
  parts.du.est_error = (2.0 * std::abs(alpha) / t) * parts.u.est_error +
                       (2.0 / t) * moments[1].est_error;
  parts.du.node_count = moments[1].node_count;
  return parts;
}

// Central finite-difference check of du against extension_value; returns the
// discrepancy (folded into error estimates by callers).
double fd_cross_check(const Operator& op, const FractionalOrder& ord,
                      const Vector& x, double t, double tol, const Vector& du,
                      ExecPolicy policy) {
  const double delta = t * 1e-4;
  const double tol_fd = std::min(tol, 1e-11);
  const Evaluated up = extension_value(op, ord, x, t + delta, tol_fd, policy);
  const Evaluated um = extension_value(op, ord, x, t - delta, tol_fd, policy);
  const Vector fd = (up.value - um.value) / (2.0 * delta);
  const NormKind nk = op.norm_kind();
  const double disc = norm_of(fd - du, nk);
  const double scale = std::max(norm_of(du, nk), norm_of(fd, nk));
  const double fd_noise = (up.est_error + um.est_error) / (2.0 * delta);
  const double budget =
      100.0 * std::max(tol, 1e-12) * scale + 4.0 * fd_noise + 2e-8 * scale;
  if (disc > budget) {
    std::ostringstream os;
    os << "extension_derivative: analytic/finite-difference cross-check failed "
       << "at t = " << t << " (discrepancy " << disc << ", budget " << budget
       << "); implementation fault";
    throw CrossCheckError(os.str());
  }
  return disc;
}

}  // namespace

Evaluated extension_value(const Operator& op, const FractionalOrder& ord,
                          const Vector& x, double t, double tol,
                          ExecPolicy policy) {
  if (t < 0.0) throw DomainError("extension_value: t must be >= 0");
  if (t == 0.0) return Evaluated{x, 0.0, 0};
  auto moments = subordination_moments(op, ord, x, t, {0}, tol, policy);
  return std::move(moments[0]);
}

Evaluated extension_derivative(const Operator& op, const FractionalOrder& ord,
                               const Vector& x, double t, double tol,
                               bool fd_check, ExecPolicy policy) {
  if (!(t > 0.0)) throw DomainError("extension_derivative: t must be > 0");
  DerivativeParts parts = derivative_parts(op, ord, x, t, tol, policy);
  if (fd_check) {
    parts.du.est_error +=
        fd_cross_check(op, ord, x, t, tol, parts.du.value, policy);
  }
  return std::move(parts.du);
}

double ode_residual(const Operator& op, const FractionalOrder& ord,
                    const Vector& x, double t, double tol, ExecPolicy policy) {
  if (!(t > 0.0)) throw DomainError("ode_residual: t must be > 0");
  const double tol_r = std::min(tol, 1e-11);
  auto moments = subordination_moments(op, ord, x, t, {0, 1, 2}, tol_r, policy);
  const Complex alpha = ord.alpha();
  const Vector& u = moments[0].value;
  const Vector& i1 = moments[1].value;
  const Vector& i2 = moments[2].value;
  const Vector du = (2.0 * alpha / t) * u - (2.0 / t) * i1;
  const Vector ddu = -(2.0 * alpha / (t * t)) * u + (2.0 * alpha / t) * du +
                     (4.0 / (t * t)) * (i2 - (alpha + 0.5) * i1);
  const Vector au = op.apply(u);
  const NormKind nk = op.norm_kind();
  const Vector residual = ddu + ((1.0 - 2.0 * alpha) / t) * du - au;
  return norm_of(residual, nk) /
         std::max(norm_of(au, nk), norm_of(x, nk));
}

ExtensionTrace extension_trace(const Operator& op, const FractionalOrder& ord,
                               const Vector& x, double t0, double ratio,
                               int steps, double tol, ExecPolicy policy) {
  if (!(t0 > 0.0)) throw DomainError("extension_trace: t0 must be > 0");
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw DomainError("extension_trace: ratio must be in (0, 1)");
  }
  if (steps < 1) throw DomainError("extension_trace: steps must be >= 1");

  ExtensionTrace trace;
  trace.t_grid.resize(steps);
  trace.u_values.resize(steps);
  trace.du_values.resize(steps);
  trace.quad_errors.resize(steps);
  double t = t0;
  for (int k = 0; k < steps; ++k, t *= ratio) trace.t_grid[k] = t;
  // Samples are independent; the node loops inside become the serial leg of
  // whichever level gets the threads first.
  for_each_index(static_cast<std::size_t>(steps), [&](std::size_t k) {
    const double tk = trace.t_grid[k];
    DerivativeParts parts = derivative_parts(op, ord, x, tk, tol, policy);
    const double disc =
        fd_cross_check(op, ord, x, tk, tol, parts.du.value, policy);
    trace.u_values[k] = std::move(parts.u.value);
    trace.du_values[k] = std::move(parts.du.value);
    trace.quad_errors[k] = parts.du.est_error + disc;
  }, policy);
  return trace;
}

DtnReport dtn_extract(const Operator& op, const FractionalOrder& ord,
                      const Vector& x, const DtnParams& params,
                      ExecPolicy policy) {
  if (ord.re() > params.max_re_alpha) {
    std::ostringstream os;
    os << "dtn_extract: Re alpha = " << ord.re() << " exceeds the guard "
       << params.max_re_alpha << " (t^{1-2 alpha} cancellation)";
    throw DomainError(os.str());
  }
  if (params.steps < 4) throw DomainError("dtn_extract: steps must be >= 4");
  if (!(params.ratio > 0.0 && params.ratio < 1.0)) {
    throw DomainError("dtn_extract: ratio must be in (0, 1)");
  }

  DtnReport report;
  report.pass_tol = params.pass_tol;
  report.trace = extension_trace(op, ord, x, params.t0, params.ratio,
                                 params.steps, params.tol, policy);

  const Complex alpha = ord.alpha();
  const NormKind nk = op.norm_kind();
  const int steps = params.steps;
  std::vector<double> phi_errors(steps);
  report.phi_values.resize(steps);
  for (int k = 0; k < steps; ++k) {
    const double t = report.trace.t_grid[k];
    const Complex factor = -principal_power(t, 1.0 - 2.0 * alpha);
    report.phi_values[k] = factor * report.trace.du_values[k];
    phi_errors[k] = std::abs(factor) * report.trace.quad_errors[k];
  }

  // Fit window: the last max(4, steps-2) samples, minus noise-dominated ones.
  const int window = std::min(steps, std::max(4, steps - 2));
  const int first = steps - window;
  double spread = 0.0;
  for (int i = first; i < steps; ++i) {
    for (int j = i + 1; j < steps; ++j) {
      spread = std::max(spread,
                        norm_of(report.phi_values[i] - report.phi_values[j], nk));
    }
  }
  double phi_scale = 0.0;
  for (int k = first; k < steps; ++k) {
    phi_scale = std::max(phi_scale, norm_of(report.phi_values[k], nk));
  }

  std::vector<int> usable;
  for (int k = first; k < steps; ++k) {
    if (spread <= 1e-14 * phi_scale || phi_errors[k] <= 0.1 * spread) {
      usable.push_back(k);
    }
  }
  if (static_cast<int>(usable.size()) < 3) {
    throw ConvergenceError(
        "dtn_extract: fit failure, quadrature noise dominates the sample "
        "spread in the extrapolation window");
  }
  report.fit_samples_used = static_cast<int>(usable.size());

  // Least squares for phi ~ L + C t^{2-2 alpha} (complex exponent; its
  // modulus is the paper-order t^{2-2 Re alpha}).
  const Complex corr_exp = 2.0 - 2.0 * alpha;
  const double m = static_cast<double>(usable.size());
  Complex s01(0.0, 0.0);
  double s11 = 0.0;
  std::vector<Complex> basis(usable.size());
  for (std::size_t i = 0; i < usable.size(); ++i) {
    basis[i] = principal_power(report.trace.t_grid[usable[i]], corr_exp);
    s01 += basis[i];
    s11 += std::norm(basis[i]);
  }
  const double det = m * s11 - std::norm(s01);
  const Eigen::Index dim = x.size();
  report.extrapolated_limit = Vector(dim);
  for (Eigen::Index c = 0; c < dim; ++c) {
    Complex r0(0.0, 0.0), r1(0.0, 0.0);
    for (std::size_t i = 0; i < usable.size(); ++i) {
      const Complex v = report.phi_values[usable[i]](c);
      r0 += v;
      r1 += std::conj(basis[i]) * v;
    }
    report.extrapolated_limit(c) = (s11 * r0 - s01 * r1) / det;
  }

  // Fitted order of the residuals ||phi(t_k) - L||.
  std::vector<double> log_t, log_e;
  for (int k : usable) {
    const double e = norm_of(report.phi_values[k] - report.extrapolated_limit, nk);
    if (e > std::max(10.0 * phi_errors[k], 1e-13 * phi_scale)) {
      log_t.push_back(std::log(report.trace.t_grid[k]));
      log_e.push_back(std::log(e));
    }
  }
  if (log_t.size() >= 2) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(log_t.size());
    for (std::size_t i = 0; i < log_t.size(); ++i) {
      sx += log_t[i];
      sy += log_e[i];
      sxx += log_t[i] * log_t[i];
      sxy += log_t[i] * log_e[i];
    }
    report.fitted_exponent = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  } else {
    report.fitted_exponent = std::numeric_limits<double>::quiet_NaN();
  }

  PowerResult bala = balakrishnan_power(op, ord, x,
                                        std::min(params.tol, 1e-9), policy);
  report.reference = ord.c_alpha() * bala.value;
  const double ref_norm = norm_of(report.reference, nk);
  const double gap = norm_of(report.extrapolated_limit - report.reference, nk);
  report.rel_error = ref_norm > 0.0 ? gap / ref_norm : gap;
  report.pass = std::isfinite(report.rel_error) && report.rel_error <= params.pass_tol;
  return report;
}

}  // namespace fracpow
