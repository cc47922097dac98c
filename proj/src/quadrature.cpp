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

#include "fracpow/quadrature.hpp"

#include <cmath>

namespace fracpow {

namespace {

// Index window [jmin, jmax] of the trapezoid grid u_j = j h covering [wlo, whi].
struct Window {
  long jmin, jmax;
};

Window grid_window(double wlo, double whi, double h) {
  Window w;
  w.jmin = static_cast<long>(std::floor(wlo / h));
  w.jmax = static_cast<long>(std::ceil(whi / h));
  if (w.jmax < w.jmin) w.jmax = w.jmin;
  return w;
}

}  // namespace

QuadratureRule balakrishnan_rule(const FractionalOrder& ord, double step,
                                 double tol, double scale_left,
                                 double scale_right) {
  const double re = ord.re();
  // Tail bounds: |e^{alpha u} phi| <= scale_left e^{re u} (u -> -inf) and
  // <= scale_right e^{(re-1) u} (u -> +inf); truncate where the remaining
  // tail integral drops below tol.
  const double wlo = std::log(tol * re / scale_left) / re;
  const double whi = -std::log(tol * (1.0 - re) / scale_right) / (1.0 - re);

  const Window w = grid_window(wlo, whi, step);
  QuadratureRule rule;
  rule.transform = Transform::kExpMapLine;
  rule.step = step;
  rule.first_index = w.jmin;
  rule.nodes.reserve(static_cast<std::size_t>(w.jmax - w.jmin + 1));
  rule.weights.reserve(rule.nodes.capacity());
  for (long j = w.jmin; j <= w.jmax; ++j) {
    const double u = static_cast<double>(j) * step;
    rule.nodes.push_back(std::exp(u));
    rule.weights.push_back(step * std::exp(ord.alpha() * u));
  }
  return rule;
}

QuadratureRule gamma_weighted_rule(const FractionalOrder& ord, int k,
                                   double step, double tol) {
  const double a = ord.re() + static_cast<double>(k);
  const Complex a_c = ord.alpha() + static_cast<double>(k);
  const double L = std::log(1.0 / tol);
  // Left tail decays like e^{a w}; right tail like e^{a w - e^w}.
  const double wlo = std::log(tol * a) / a;
  double whi = 3.0;
  for (int it = 0; it < 40; ++it) whi = std::log(L + a * whi);

  const Window w = grid_window(wlo, whi, step);
  QuadratureRule rule;
  rule.transform = Transform::kGammaWeightedExpMap;
  rule.step = step;
  rule.first_index = w.jmin;
  rule.nodes.reserve(static_cast<std::size_t>(w.jmax - w.jmin + 1));
  rule.weights.reserve(rule.nodes.capacity());
  const Complex inv_gamma = 1.0 / ord.gamma_alpha();
  for (long j = w.jmin; j <= w.jmax; ++j) {
    const double wj = static_cast<double>(j) * step;
    const double s = std::exp(wj);
    rule.nodes.push_back(s);
    rule.weights.push_back(step * std::exp(a_c * wj - s) * inv_gamma);
  }
  return rule;
}

}  // namespace fracpow
