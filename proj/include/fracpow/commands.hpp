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

#include "fracpow/report.hpp"

namespace fracpow {

/// Command bodies shared between the CLI and the acceptance suite.  Each
/// returns the full machine-readable report for one run; the CLI handles
/// argument parsing, formatting and exit codes around these.

/// Balakrishnan power, plus the spectral oracle when the operator is
/// diagonalizable (the oracle's refusal is recorded, not fatal).
report::OrderedJson run_power(const Operator& op, const FractionalOrder& ord,
                              const Vector& x, double tol);

/// ExtensionTrace dump over a geometric t-grid.
report::OrderedJson run_extend(const Operator& op, const FractionalOrder& ord,
                               const Vector& x, double t0, double ratio,
                               int steps, double tol);

report::OrderedJson run_dtn(const Operator& op, const FractionalOrder& ord,
                            const Vector& x, const DtnParams& params);

/// All routes side by side with pairwise discrepancies; the DtN limit is
/// compared against c_alpha times each fractional-power route.
report::OrderedJson run_compare(const Operator& op, const FractionalOrder& ord,
                                const Vector& x, double tol,
                                const DtnParams& dtn_params);

report::OrderedJson run_validate(const Operator& op);

}  // namespace fracpow
