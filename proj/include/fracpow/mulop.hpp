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

namespace fracpow {

// Closed forms for the multiplication operator (A g)(x) = f(x) g(x) on a
// sample grid of the symbol f.  These are the executable ground truth the
// general quadrature routes are checked against:
//   u(t, x) = (2 g(x)/Gamma(alpha)) (t sqrt(f(x))/2)^alpha K_alpha(t sqrt(f(x)))
//   (A^alpha g)(x) = f(x)^alpha g(x)
// All statements are pointwise on the grid; sup-norm claims are max-over-grid.

/// Sampled symbol with its sector certificate: every value satisfies
/// |arg f(x_i)| <= sector_angle or equals 0.
struct SymbolGrid {
  std::vector<double> points;  // sample coordinates (labels for reports)
  Vector values;               // f(x_i)
  double sector_angle = 1.5707963267948966;

  Eigen::Index size() const { return values.size(); }
  void validate() const;
};

SymbolGrid symbol_grid_of(const MultiplicationOperator& op);

/// Pointwise closed-form extension value via K_alpha.  Zero-symbol points
/// return g(x_i) directly (the normalized-moment value; the K_alpha form is
/// singular there).  Throws DomainError when t |f|^{1/2} exceeds the Bessel
/// series radius.
Vector closed_form_extension(const SymbolGrid& sym, const FractionalOrder& ord,
                             const Vector& g, double t);

/// Pointwise d/dt of the closed-form extension, from
/// d/dz [z^alpha K_alpha(z)] = -z^alpha K_{alpha-1}(z):
///   du/dt (t, x) = -(2 g(x)/Gamma(alpha)) sqrt(f(x)) (t sqrt(f(x))/2)^alpha
///                  K_{alpha-1}(t sqrt(f(x))).
Vector closed_form_extension_derivative(const SymbolGrid& sym,
                                        const FractionalOrder& ord,
                                        const Vector& g, double t);

/// Pointwise fractional power f(x_i)^alpha g(x_i) with 0^alpha := 0.
Vector closed_form_power(const SymbolGrid& sym, const FractionalOrder& ord,
                         const Vector& g);

/// Pointwise small-t limit checks on a decreasing grid:
///   (i)  u(t, x_i) -> g(x_i)
///   (ii) -t^{1-2 alpha} du/dt (t, x_i) -> c_alpha f(x_i)^alpha g(x_i),
/// with per-point extrapolated limits and fitted convergence rates.
struct AsymptoticsReport {
  std::vector<double> t_grid;
  Vector boundary_target;            // g
  Vector dtn_target;                 // c_alpha f^alpha g
  Vector dtn_limit;                  // per-point extrapolated limit of (ii)
  std::vector<double> boundary_rates;  // fitted rate of |u - g|, ~ 2 Re alpha
  std::vector<double> dtn_rates;       // fitted rate of residuals, ~ 2-2 Re alpha
  double max_boundary_gap = 0.0;     // max_i |u(t_min, x_i) - g(x_i)|
  double max_dtn_rel_error = 0.0;    // max_i of limit-vs-target relative gap
};

AsymptoticsReport small_t_asymptotics_check(const SymbolGrid& sym,
                                            const FractionalOrder& ord,
                                            const Vector& g,
                                            const std::vector<double>& t_grid);

/// Grid-sup decay of ||(f+eps)^alpha g - f^alpha g|| against eps, fitted in
/// log-log; the sector estimate bounds this by C eps^{Re alpha}, attained
/// when the symbol range approaches 0.
struct ShiftDecay {
  std::vector<double> eps;
  std::vector<double> sup_gaps;
  double fitted_exponent = 0.0;
};

ShiftDecay shift_decay(const SymbolGrid& sym, const FractionalOrder& ord,
                       const Vector& g, const std::vector<double>& eps_grid);

}  // namespace fracpow
