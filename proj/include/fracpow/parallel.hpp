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
#include <exception>
#include <mutex>

namespace fracpow {

/// Execution policy for the data-parallel node loops.  `kSerial` is the
/// reference implementation; `kOpenMP` evaluates loop bodies concurrently.
/// Results are bitwise identical across policies and thread counts: each
/// index writes only its own slot and reductions run afterwards in fixed
/// index order.
enum class ExecPolicy { kSerial, kOpenMP };

/// Process-wide default policy (OpenMP when compiled in, serial otherwise).
ExecPolicy default_exec_policy();
void set_default_exec_policy(ExecPolicy policy);

/// Runs body(j) for j in [0, n).  Exceptions from worker iterations are
/// captured and the first one is rethrown on the calling thread.
template <typename Body>
void for_each_index(std::size_t n, const Body& body,
                    ExecPolicy policy = default_exec_policy()) {
  if (n == 0) return;
  if (policy == ExecPolicy::kSerial) {
    for (std::size_t j = 0; j < n; ++j) body(j);
    return;
  }
  std::exception_ptr first_error;
  std::mutex error_mutex;
#pragma omp parallel for schedule(static)
  for (long long j = 0; j < static_cast<long long>(n); ++j) {
    try {
      body(static_cast<std::size_t>(j));
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  }
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace fracpow
