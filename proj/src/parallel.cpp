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

#include "fracpow/parallel.hpp"

#include <atomic>

namespace fracpow {

namespace {

std::atomic<ExecPolicy> g_policy{
#ifdef _OPENMP
    ExecPolicy::kOpenMP
#else
    ExecPolicy::kSerial
#endif
};

}  // namespace

ExecPolicy default_exec_policy() { return g_policy.load(); }

void set_default_exec_policy(ExecPolicy policy) { g_policy.store(policy); }

}  // namespace fracpow
