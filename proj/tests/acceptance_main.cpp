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

// Verification suite runner: one pass/fail line per criterion, non-zero
// exit when anything fails.

#include <iostream>

#include "fracpow/acceptance.hpp"

int main() {
  const fracpow::acceptance::Outcome outcome =
      fracpow::acceptance::run_suite(std::cout);
  std::cout << (outcome.all_pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  return outcome.all_pass ? 0 : 1;
}
