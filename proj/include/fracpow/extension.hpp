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

#include <vector>

#include "fracpow/balakrishnan.hpp"
#include "fracpow/operators.hpp"
#include "fracpow/parallel.hpp"

namespace fracpow {

/// One adaptively evaluated quantity with its successive-difference error
/// estimate and the node count of the accepted rule.
struct Evaluated {
  Vector value;
  double est_error = 0.0;
  int node_count = 0;
};

/// Extension operator value
///   U(t) x = (1/Gamma(alpha)) int_0^infty s^{alpha-1} e^{-s} T(t^2/(4s)) x ds
/// (U(0) x = x), the subordination integral of the semigroup solving the
/// Bessel-type equation u'' + (1-2 alpha)/t u' = A u with u(0) = x.
Evaluated extension_value(const Operator& op, const FractionalOrder& ord,
                          const Vector& x, double t, double tol = 1e-10,
                          ExecPolicy policy = default_exec_policy());

/// U'(t) x via the differentiated subordination integral,
///   U'(t) x = (2 alpha / t) U(t) x - (2/t) I_1(t),
///   I_1(t) = (1/Gamma(alpha)) int_0^infty s^alpha e^{-s} T(t^2/(4s)) x ds.
/// When `fd_cross_check` is set (the default) the result is compared with a
/// central finite difference of extension_value at step t*1e-4; the
/// discrepancy is folded into est_error, and a disagreement far beyond the
/// combined error budget throws CrossCheckError (implementation fault).
Evaluated extension_derivative(const Operator& op, const FractionalOrder& ord,
                               const Vector& x, double t, double tol = 1e-10,
                               bool fd_cross_check = true,
                               ExecPolicy policy = default_exec_policy());

/// Relative residual of the extension ODE at time t:
///   ||u''(t) + (1-2 alpha)/t u'(t) - A u(t)|| / max(||A u(t)||, ||x||),
/// with u'' from the analytic differentiated-integral formula.
double ode_residual(const Operator& op, const FractionalOrder& ord,
                    const Vector& x, double t, double tol = 1e-11,
                    ExecPolicy policy = default_exec_policy());

/// Sampled extension along a decreasing geometric t-grid.
struct ExtensionTrace {
  std::vector<double> t_grid;       // t0 * ratio^k, strictly decreasing
  std::vector<Vector> u_values;     // U(t_k) x
  std::vector<Vector> du_values;    // U'(t_k) x
  std::vector<double> quad_errors;  // per-sample quadrature error estimates
};

ExtensionTrace extension_trace(const Operator& op, const FractionalOrder& ord,
                               const Vector& x, double t0, double ratio,
                               int steps, double tol = 1e-10,
                               ExecPolicy policy = default_exec_policy());

/// Dirichlet-to-Neumann extraction report: the extrapolated limit of
/// phi(t) = -t^{1-2 alpha} U'(t) x, the Balakrishnan reference scaled by
/// c_alpha, the fitted error exponent, and the relative discrepancy.
struct DtnReport {
  Vector extrapolated_limit;  // ~ T_alpha x
  Vector reference;           // c_alpha * A^alpha x (Balakrishnan route)
  double fitted_exponent = 0.0;
  double rel_error = 0.0;
  bool pass = false;
  double pass_tol = 1e-4;
  int fit_samples_used = 0;
  ExtensionTrace trace;
  std::vector<Vector> phi_values;  // phi(t_k) alongside trace.t_grid
};

struct DtnParams {
  double t0 = 1.0;
  double ratio = 0.5;
  int steps = 8;
  double tol = 1e-10;      // quadrature tolerance for the trace
  double pass_tol = 1e-4;  // limit-vs-reference acceptance threshold
  double max_re_alpha = 0.9;
};

/// Evaluates phi(t_k) on t_k = t0 ratio^k, fits phi ~ L + C t^{2-2 alpha}
/// by least squares on the last max(4, steps-2) usable samples (samples
/// whose quadrature error exceeds a tenth of the sample spread are
/// discarded as noise-dominated), and compares L against
/// c_alpha * balakrishnan_power.  The fitted exponent is the log-residual
/// slope of ||phi(t_k) - L||; the expected order is 2 - 2 Re alpha.
DtnReport dtn_extract(const Operator& op, const FractionalOrder& ord,
                      const Vector& x, const DtnParams& params = {},
                      ExecPolicy policy = default_exec_policy());

}  // namespace fracpow
