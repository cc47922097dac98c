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

#include "fracpow/operators.hpp"
#include "fracpow/parallel.hpp"
#include "fracpow/quadrature.hpp"

namespace fracpow {

enum class Route { kBalakrishnan, kShiftedLimit, kSpectralOracle, kDtn };

const char* route_name(Route route);

/// Result of a fractional-power evaluation: the value, the adaptive
/// scheme's last successive-difference estimate, the node count of the
/// accepted rule, and which route produced it.
struct PowerResult {
  Vector value;
  double est_error = 0.0;
  int node_count_used = 0;
  Route route = Route::kBalakrishnan;
};

/// Scalar Balakrishnan identity
///   z^alpha = sin(alpha pi)/pi * int_0^infty t^{alpha-1} z/(t+z) dt
/// evaluated with the given rule.  Requires |arg z| < pi.
Complex scalar_balakrishnan(Complex z, const FractionalOrder& ord,
                            const QuadratureRule& rule);

/// Adaptive wrapper around scalar_balakrishnan: doubles the rule until two
/// consecutive values differ by <= tol * max(1, |value|).
struct ScalarPower {
  Complex value;
  double est_error = 0.0;
  int node_count_used = 0;
};
ScalarPower scalar_fractional_power(Complex z, const FractionalOrder& ord,
                                    double tol = 1e-10);

/// A^alpha x through the Balakrishnan integral
///   sin(alpha pi)/pi * int_0^infty t^{alpha-1} (t + A)^{-1} A x dt,
/// exponential-map trapezoid rule, node count doubled until two successive
/// values differ by <= tol * max(||value||, ||x||) in the operator's norm.
/// Per-node resolvent solves run under `policy`; the reduction is a fixed
/// pairwise tree, so results are bitwise independent of the policy.
PowerResult balakrishnan_power(const Operator& op, const FractionalOrder& ord,
                               const Vector& x, double tol = 1e-10,
                               ExecPolicy policy = default_exec_policy());

/// Shifted-power limit  A^alpha x = lim_{eps->0+} (A + eps)^alpha x.
/// Walks eps_sequence (default 2^{-j}, j = 2..12), evaluating the
/// Balakrishnan power of A + eps_j, and declares the limit once successive
/// values differ by <= tol * max(||value||, ||x||).  The declared tolerance
/// is the eps-resolution of the limit, not a quadrature tolerance; the
/// default 1e-2 reflects the O(eps^{Re alpha}) approach near 0 in sigma(A).
/// Also fits the decay exponent of ||(A+eps)^alpha x - limit|| against eps.
struct ShiftedPowerResult {
  PowerResult power;                 // route = kShiftedLimit
  std::vector<double> eps_used;
  std::vector<double> gaps;          // ||value(eps_j) - limit|| per used eps
  double fitted_eps_exponent = 0.0;  // slope of log gap vs log eps
};
std::vector<double> default_eps_sequence();
ShiftedPowerResult shifted_power(const Operator& op, const FractionalOrder& ord,
                                 const Vector& x,
                                 const std::vector<double>& eps_sequence =
                                     default_eps_sequence(),
                                 double tol = 1e-2,
                                 ExecPolicy policy = default_exec_policy());

}  // namespace fracpow
