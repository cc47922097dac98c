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

#include <doctest.h>

#include <cmath>

#include "fracpow/commands.hpp"
#include "fracpow/operator_io.hpp"

using namespace fracpow;
using nlohmann::json;

namespace {

Vector vec3(Complex a, Complex b, Complex c) {
  Vector v(3);
  v << a, b, c;
  return v;
}

}  // namespace

TEST_CASE("complex and vector JSON forms") {
  CHECK(complex_from_json(json::parse("3.5")) == Complex(3.5, 0.0));
  CHECK(complex_from_json(json::parse("[1.5, -2.0]")) == Complex(1.5, -2.0));
  CHECK_THROWS_AS(complex_from_json(json::parse("[1,2,3]")), DomainError);
  CHECK_THROWS_AS(complex_from_json(json::parse("\"x\"")), DomainError);

  const Vector v = vector_from_json(json::parse("[[1,2], 3, [0,-1]]"));
  CHECK(v.size() == 3);
  CHECK(v(0) == Complex(1.0, 2.0));
  CHECK(v(1) == Complex(3.0, 0.0));
  CHECK_THROWS_AS(vector_from_json(json::parse("[]")), DomainError);
  CHECK_THROWS_AS(vector_from_json(json::parse("7")), DomainError);

  // values survive a serialize/parse round trip exactly
  const Vector round = vector_from_json(json::parse(vector_to_json(v).dump()));
  CHECK((round - v).norm() == 0.0);
}

TEST_CASE("operator specs") {
  SUBCASE("dense_matrix") {
    const json spec = json::parse(R"({
      "kind": "dense_matrix",
      "matrix": [[[1,0],[0.5,-0.5]],[[0,0],[2,0]]]
    })");
    const auto op = operator_from_json(spec);
    CHECK(op->kind() == OperatorKind::kDenseMatrix);
    CHECK(op->dim() == 2);
    CHECK(op->norm_kind() == NormKind::kEuclidean);
    CHECK(op->dense_matrix()(0, 1) == Complex(0.5, -0.5));
  }

  SUBCASE("laplacian_1d") {
    const json spec = json::parse(R"({"kind":"laplacian_1d","n":4,"h":0.25})");
    const auto op = operator_from_json(spec);
    CHECK(op->dim() == 4);
    Vector e1 = Vector::Zero(4);
    e1(0) = 1.0;
    CHECK(op->apply(e1)(0) == Complex(32.0, 0.0));  // 2/h^2
  }

  SUBCASE("multiplication with labels") {
    const json spec = json::parse(R"({
      "kind": "multiplication",
      "symbol": [[1,0],[0,1]],
      "theta": 1.5707963267948966,
      "points": [0.0, 1.0]
    })");
    const auto op = operator_from_json(spec);
    CHECK(op->norm_kind() == NormKind::kSup);
    const auto& mult = static_cast<const MultiplicationOperator&>(*op);
    CHECK(mult.points()[1] == 1.0);
  }

  SUBCASE("schema violations") {
    CHECK_THROWS_AS(operator_from_json(json::parse("{}")), DomainError);
    CHECK_THROWS_AS(operator_from_json(json::parse(R"({"kind":"foo"})")),
                    DomainError);
    CHECK_THROWS_AS(
        operator_from_json(json::parse(R"({"kind":"dense_matrix","matrix":[[1,2],[3]]})")),
        DomainError);
    CHECK_THROWS_AS(
        operator_from_json(json::parse(R"({"kind":"laplacian_1d","n":4})")),
        DomainError);
    CHECK_THROWS_AS(
        operator_from_json(
            json::parse(R"({"kind":"multiplication","symbol":[[1,0]],"norm":"euclidean"})")),
        DomainError);
    CHECK_THROWS_AS(load_operator("/nonexistent/op.json"), DomainError);
  }

  SUBCASE("round trip") {
    const json spec = json::parse(R"({
      "kind": "multiplication",
      "symbol": [[0,0],[2,1],[4,0]],
      "theta": 0.9
    })");
    const auto op = operator_from_json(spec);
    const auto back = operator_from_json(operator_to_json(*op));
    CHECK((op->dense_matrix() - back->dense_matrix()).norm() == 0.0);
    CHECK(back->norm_kind() == NormKind::kSup);
  }
}

TEST_CASE("reports") {
  const MultiplicationOperator op(vec3(1.0, 4.0, 9.0), 0.0);
  const FractionalOrder ord({0.5, 0.0});
  const Vector x = vec3(1.0, 1.0, 1.0);

  SUBCASE("power report structure and in-process determinism") {
    const auto rep1 = run_power(op, ord, x, 1e-9);
    const auto rep2 = run_power(op, ord, x, 1e-9);
    CHECK(rep1.at("schema") == 1);
    CHECK(rep1.at("command") == "power");
    CHECK(rep1.at("operator").at("kind") == "multiplication");
    CHECK(rep1.at("routes").contains("balakrishnan"));
    CHECK(rep1.at("routes").contains("spectral_oracle"));
    CHECK(rep1.dump() == rep2.dump());

    const std::string csv = report::csv_projection(rep1);
    CHECK(csv.find("route,est_error,node_count") == 0);
    CHECK(csv.find("balakrishnan") != std::string::npos);
  }

  SUBCASE("validate report and csv") {
    const auto rep = run_validate(op);
    CHECK(rep.at("report").at("m_estimate").get<double>() >= 1.0);
    const std::string csv = report::csv_projection(rep);
    CHECK(csv.rfind("lambda,norm", 0) == 0);
  }

  SUBCASE("compare report pass flag is recomputable from its own fields") {
    DtnParams params;
    params.t0 = 1.0 / 64.0;
    params.steps = 8;
    params.tol = 1e-10;
    const auto rep = run_compare(op, ord, x, 1e-9, params);
    double max_disc = 0.0;
    for (const auto& [key, value] : rep.at("discrepancies").items()) {
      if (key.find("shifted_limit") == std::string::npos) {
        max_disc = std::max(max_disc, value.get<double>());
      }
    }
    CHECK(rep.at("max_discrepancy").get<double>() == max_disc);
    CHECK(rep.at("pass").get<bool>() ==
          (max_disc <= rep.at("pass_tol").get<double>()));
    CHECK(rep.at("routes").contains("dtn"));
    CHECK(rep.at("routes").contains("shifted_limit"));
  }

  SUBCASE("extend csv rows") {
    const auto rep = run_extend(op, ord, x, 0.5, 0.5, 4, 1e-9);
    const std::string csv = report::csv_projection(rep);
    CHECK(csv.rfind("t,quad_error,u0_re", 0) == 0);
    // header + 4 rows
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
  }
}
