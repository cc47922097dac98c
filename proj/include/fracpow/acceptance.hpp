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

#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include "fracpow/operators.hpp"
#include "fracpow/report.hpp"

namespace fracpow::acceptance {

/// The operator fixture set every "all shipped operators" check runs over.
struct NamedOperator {
  std::string name;
  std::shared_ptr<Operator> op;
};
std::vector<NamedOperator> shipped_operators();

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // worst-case numbers, or the failure description
};

struct Outcome {
  std::vector<CriterionResult> criteria;
  bool all_pass = false;
};

/// Runs the full verification suite, printing one pass/fail line per
/// criterion to `lines` as it goes.
Outcome run_suite(std::ostream& lines);

report::OrderedJson suite_report(const Outcome& outcome);

}  // namespace fracpow::acceptance
