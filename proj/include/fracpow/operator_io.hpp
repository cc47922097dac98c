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

#include <memory>
#include <string>

#include <json.hpp>

#include "fracpow/operators.hpp"

namespace fracpow {

// Operator specification schema (JSON object):
//   {"kind": "dense_matrix",   "norm": "euclidean", "matrix": [[[re,im], ...], ...]}
//   {"kind": "laplacian_1d",   "norm": "euclidean", "n": 8, "h": 1.0}
//   {"kind": "multiplication", "norm": "sup",
//    "symbol": [[re,im], ...], "theta": 1.5707963, "points": [0.0, ...]}
// Complex numbers are [re, im] pairs; a bare number is accepted on input as
// a real value.  "norm" is optional and defaults to the kind's natural norm
// (euclidean for matrices, sup for multiplication).  "theta"/"points" are
// optional.

/// Parses a complex scalar from a JSON value ([re, im] pair or number).
Complex complex_from_json(const nlohmann::json& j);
nlohmann::json complex_to_json(Complex z);

Vector vector_from_json(const nlohmann::json& j);
nlohmann::json vector_to_json(const Vector& v);

/// Builds an operator from a parsed spec; throws DomainError/DimensionError
/// on schema violations.
std::unique_ptr<Operator> operator_from_json(const nlohmann::json& spec);

/// Loads an operator spec from a file path.
std::unique_ptr<Operator> load_operator(const std::string& path);

nlohmann::json operator_to_json(const Operator& op);

}  // namespace fracpow
