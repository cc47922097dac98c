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

#include "fracpow/operator_io.hpp"

#include <fstream>
#include <sstream>

namespace fracpow {

using nlohmann::json;

Complex complex_from_json(const json& j) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
    return Complex(j[0].get<double>(), j[1].get<double>());
  }
  throw DomainError("expected a number or a [re, im] pair, got: " + j.dump());
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

Vector vector_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw DomainError("expected a non-empty array of scalars");
  }
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) {
    v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  }
  return v;
}

json vector_to_json(const Vector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
  return out;
}

namespace {

NormKind norm_from_spec(const json& spec, NormKind fallback) {
  if (!spec.contains("norm")) return fallback;
  const std::string s = spec.at("norm").get<std::string>();
  if (s == "euclidean") return NormKind::kEuclidean;
  if (s == "sup") return NormKind::kSup;
  throw DomainError("unknown norm kind: " + s);
}

}  // namespace

std::unique_ptr<Operator> operator_from_json(const json& spec) {
  if (!spec.is_object() || !spec.contains("kind")) {
    throw DomainError("operator spec must be an object with a \"kind\" field");
  }
  const std::string kind = spec.at("kind").get<std::string>();

  if (kind == "dense_matrix") {
    if (!spec.contains("matrix") || !spec.at("matrix").is_array()) {
      throw DomainError("dense_matrix spec needs a \"matrix\" array of rows");
    }
    const auto& rows = spec.at("matrix");
    const Eigen::Index n = static_cast<Eigen::Index>(rows.size());
    Matrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) {
        throw DomainError("dense_matrix spec: matrix must be square");
      }
      for (Eigen::Index j = 0; j < n; ++j) {
        a(i, j) = complex_from_json(row[static_cast<std::size_t>(j)]);
      }
    }
    if (norm_from_spec(spec, NormKind::kEuclidean) != NormKind::kEuclidean) {
      throw DomainError("dense_matrix operators carry the euclidean norm");
    }
    return std::make_unique<DenseOperator>(std::move(a));
  }

  if (kind == "laplacian_1d") {
    if (!spec.contains("n") || !spec.contains("h")) {
      throw DomainError("laplacian_1d spec needs \"n\" and \"h\"");
    }
    const Eigen::Index n = spec.at("n").get<Eigen::Index>();
    const double h = spec.at("h").get<double>();
    if (norm_from_spec(spec, NormKind::kEuclidean) != NormKind::kEuclidean) {
      throw DomainError("laplacian_1d operators carry the euclidean norm");
    }
    return std::make_unique<Laplacian1d>(n, h);
  }

  if (kind == "multiplication") {
    if (!spec.contains("symbol")) {
      throw DomainError("multiplication spec needs a \"symbol\" array");
    }
    Vector symbol = vector_from_json(spec.at("symbol"));
    double theta = 1.5707963267948966;
    if (spec.contains("theta")) theta = spec.at("theta").get<double>();
    std::vector<double> points;
    if (spec.contains("points")) {
      points = spec.at("points").get<std::vector<double>>();
    }
    if (norm_from_spec(spec, NormKind::kSup) != NormKind::kSup) {
      throw DomainError("multiplication operators carry the sup norm");
    }
    return std::make_unique<MultiplicationOperator>(std::move(symbol), theta,
                                                    std::move(points));
  }

  throw DomainError("unknown operator kind: " + kind);
}

std::unique_ptr<Operator> load_operator(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open operator spec file: " + path);
  json spec;
  try {
    in >> spec;
  } catch (const json::parse_error& e) {
    std::ostringstream os;
    os << "operator spec parse error in " << path << ": " << e.what();
    throw DomainError(os.str());
  }
  return operator_from_json(spec);
}

json operator_to_json(const Operator& op) {
  json spec;
  spec["kind"] = op.kind_name();
  spec["norm"] = op.norm_kind() == NormKind::kEuclidean ? "euclidean" : "sup";
  switch (op.kind()) {
    case OperatorKind::kDenseMatrix: {
      const Matrix a = op.dense_matrix();
      json rows = json::array();
      for (Eigen::Index i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(complex_to_json(a(i, j)));
        rows.push_back(std::move(row));
      }
      spec["matrix"] = std::move(rows);
      break;
    }
    case OperatorKind::kLaplacian1d: {
      const auto& lap = static_cast<const Laplacian1d&>(op);
      spec["n"] = lap.dim();
      spec["h"] = lap.spacing();
      break;
    }
    case OperatorKind::kMultiplication: {
      const auto& mult = static_cast<const MultiplicationOperator&>(op);
      spec["symbol"] = vector_to_json(mult.symbol());
      spec["theta"] = mult.sector_angle();
      if (!mult.points().empty()) spec["points"] = mult.points();
      break;
    }
  }
  return spec;
}

}  // namespace fracpow
