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

#include <stdexcept>
#include <string>

namespace fracpow {

/// Base class of all errors thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Argument outside the mathematical domain of an operation
/// (branch cut, pole, sector violation, invalid order).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Vector/operator dimension mismatch.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An iterative or adaptive scheme hit its node/term cap before
/// meeting its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// A linear solve or eigendecomposition failed or was refused
/// (singular system, ill-conditioned eigenbasis).
class SolveError : public Error {
 public:
  using Error::Error;
};

/// Two independent evaluation routes disagreed far beyond their error
/// budgets; indicates an implementation fault rather than bad input.
class CrossCheckError : public Error {
 public:
  using Error::Error;
};

}  // namespace fracpow
