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

#include <string>

#include <json.hpp>

#include "fracpow/balakrishnan.hpp"
#include "fracpow/extension.hpp"
#include "fracpow/operators.hpp"

namespace fracpow::report {

// Machine-readable convergence reports ("schema": 1).  Field order is fixed
// and all values are plain computed numbers, so identical runs produce
// byte-identical documents.  Complex numbers are [re, im] pairs.

using OrderedJson = nlohmann::ordered_json;

OrderedJson complex_json(Complex z);
OrderedJson vector_json(const Vector& v);

/// Common preamble: schema version, command, alpha, operator metadata.
OrderedJson header(const std::string& command, Complex alpha,
                   const Operator* op);

OrderedJson power_json(const PowerResult& r);
OrderedJson shifted_json(const ShiftedPowerResult& r);
OrderedJson trace_json(const ExtensionTrace& trace);
OrderedJson dtn_json(const DtnReport& r, const FractionalOrder& ord);
OrderedJson sector_json(const SectorReport& r);

/// Flat CSV projection of the convergence-table fields of a report
/// (trace rows, lambda/norm rows, per-route rows or criterion rows,
/// depending on the command recorded in the report).
std::string csv_projection(const OrderedJson& rep);

}  // namespace fracpow::report
