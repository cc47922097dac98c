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

#include <cstddef>
#include <vector>

#include "fracpow/special_functions.hpp"

namespace fracpow {

/// How a rule's nodes/weights were produced from the original integral.
enum class Transform {
  /// t = e^u substitution of a half-line integral with algebraic endpoint
  /// behaviour; trapezoid in u.
  kExpMapLine,
  /// s = e^w substitution of a Gamma-type integral s^{a-1} e^{-s} phi(s);
  /// trapezoid in w with the full weight folded into the rule.
  kGammaWeightedExpMap,
  kNone,
};

/// A positive-node quadrature rule with complex weights.  All singular or
/// exponential factors of the integrand are folded into the weights, so a
/// rule is applied as  sum_j weights[j] * phi(nodes[j])  where phi is the
/// remaining smooth (operator-valued) factor.
struct QuadratureRule {
  std::vector<double> nodes;     // strictly increasing, positive
  std::vector<Complex> weights;  // same length as nodes
  Transform transform = Transform::kNone;
  double step = 0.0;             // trapezoid step h used to build the rule
  long first_index = 0;          // grid index j of nodes[0] (node = e^{j h})

  std::size_t node_count() const { return nodes.size(); }
};

/// Rule for int_0^infty t^{alpha-1} phi(t) dt where phi is bounded near 0
/// and decays like 1/t at infinity (a resolvent factor).  Built on the
/// exponential map t = e^u:  weights_j = h e^{alpha u_j}.  The truncation
/// window is chosen so that the neglected tails are below `tol` relative
/// to a unit-size phi, with `scale_left`/`scale_right` multiplying the two
/// tail bounds (callers pass norm bounds of phi there).
QuadratureRule balakrishnan_rule(const FractionalOrder& ord, double step,
                                 double tol, double scale_left = 1.0,
                                 double scale_right = 1.0);

/// Rule for (1/Gamma(alpha)) int_0^infty s^{a-1} e^{-s} phi(s) ds with
/// a = alpha + k, phi bounded; nodes are s_j = e^{w_j} and the weights
/// carry h e^{a w_j - s_j} / Gamma(alpha).  Exact for phi == 1 up to the
/// trapezoid error: sum(weights) ~= Gamma(alpha+k)/Gamma(alpha).
QuadratureRule gamma_weighted_rule(const FractionalOrder& ord, int k,
                                   double step, double tol);

/// Deterministic pairwise index-order sum of a weighted term sequence;
/// used by all rule applications so results are bitwise reproducible
/// independent of evaluation order/thread count.
template <typename T, typename GetTerm>
T pairwise_sum(std::size_t count, const GetTerm& term) {
  // term(j) must return the j-th summand by value.
  struct Rec {
    static T sum(std::size_t lo, std::size_t hi, const GetTerm& term) {
      if (hi - lo == 1) return term(lo);
      const std::size_t mid = lo + (hi - lo) / 2;
      return sum(lo, mid, term) + sum(mid, hi, term);
    }
  };
  return Rec::sum(0, count, term);
}

}  // namespace fracpow
