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

#include <unordered_map>
#include <vector>

#include "fracpow/operators.hpp"
#include "fracpow/parallel.hpp"

namespace fracpow::detail {

// Per-node operator evaluations on the dyadic trapezoid grid w_j = j h.
// Halving h maps index j to 2j with w unchanged (h is a power of two and
// j h is exact), so values computed at a coarse level are reused verbatim
// at finer ones; results stay bitwise identical to recomputation.
class NodeCache {
 public:
  void halve_step() {
    std::unordered_map<long, Vector> rekeyed;
    rekeyed.reserve(values_.size());
    for (auto& [j, v] : values_) rekeyed.emplace(2 * j, std::move(v));
    values_ = std::move(rekeyed);
  }

  // Ensures values for all j in [jmin, jmax]; missing ones are produced by
  // eval(w) with w = j h, evaluated under `policy`.
  template <typename Eval>
  void ensure(long jmin, long jmax, double step, const Eval& eval,
              ExecPolicy policy) {
    std::vector<long> missing;
    for (long j = jmin; j <= jmax; ++j) {
      if (!values_.count(j)) missing.push_back(j);
    }
    std::vector<Vector> fresh(missing.size());
    for_each_index(missing.size(), [&](std::size_t i) {
      fresh[i] = eval(static_cast<double>(missing[i]) * step);
    }, policy);
    for (std::size_t i = 0; i < missing.size(); ++i) {
      values_.emplace(missing[i], std::move(fresh[i]));
    }
  }

  const Vector& at(long j) const { return values_.at(j); }

 private:
  std::unordered_map<long, Vector> values_;
};

}  // namespace fracpow::detail
