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

#include "fracpow/report.hpp"

#include <cmath>
#include <sstream>

namespace fracpow::report {

namespace {

// CSV cells use max_digits10 so values round-trip; the JSON layer relies on
// nlohmann's shortest-round-trip formatting, which is equally deterministic.
std::string num(double v) {
  if (std::isnan(v)) return "nan";
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

void csv_vector_cells(std::ostringstream& os, const OrderedJson& vec) {
  for (const auto& z : vec) {
    os << ',' << num(z[0].get<double>()) << ',' << num(z[1].get<double>());
  }
}

}  // namespace

OrderedJson complex_json(Complex z) {
  return OrderedJson::array({z.real(), z.imag()});
}

OrderedJson vector_json(const Vector& v) {
  OrderedJson out = OrderedJson::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
  return out;
}

OrderedJson header(const std::string& command, Complex alpha,
                   const Operator* op) {
  OrderedJson rep;
  rep["schema"] = 1;
  rep["command"] = command;
  rep["alpha"] = complex_json(alpha);
  if (op != nullptr) {
    OrderedJson meta;
    meta["kind"] = op->kind_name();
    meta["dim"] = op->dim();
    meta["norm"] = op->norm_kind() == NormKind::kEuclidean ? "euclidean" : "sup";
    rep["operator"] = std::move(meta);
  }
  return rep;
}

OrderedJson power_json(const PowerResult& r) {
  OrderedJson out;
  out["route"] = route_name(r.route);
  out["value"] = vector_json(r.value);
  out["est_error"] = r.est_error;
  out["node_count"] = r.node_count_used;
  return out;
}

OrderedJson shifted_json(const ShiftedPowerResult& r) {
  OrderedJson out = power_json(r.power);
  out["eps_used"] = r.eps_used;
  out["gaps"] = r.gaps;
  out["fitted_eps_exponent"] = r.fitted_eps_exponent;
  return out;
}

OrderedJson trace_json(const ExtensionTrace& trace) {
  OrderedJson out;
  out["t"] = trace.t_grid;
  OrderedJson u = OrderedJson::array();
  OrderedJson du = OrderedJson::array();
  for (std::size_t k = 0; k < trace.u_values.size(); ++k) {
    u.push_back(vector_json(trace.u_values[k]));
    du.push_back(vector_json(trace.du_values[k]));
  }
  out["u"] = std::move(u);
  out["du"] = std::move(du);
  out["quad_errors"] = trace.quad_errors;
  return out;
}

OrderedJson dtn_json(const DtnReport& r, const FractionalOrder& ord) {
  OrderedJson out;
  out["extrapolated_limit"] = vector_json(r.extrapolated_limit);
  out["reference"] = vector_json(r.reference);
  out["c_alpha"] = complex_json(ord.c_alpha());
  out["rel_error"] = r.rel_error;
  out["fitted_exponent"] = r.fitted_exponent;
  out["expected_exponent"] = 2.0 - 2.0 * ord.re();
  out["fit_samples_used"] = r.fit_samples_used;
  out["pass_tol"] = r.pass_tol;
  out["pass"] = r.pass;
  out["trace"] = trace_json(r.trace);
  OrderedJson phi = OrderedJson::array();
  for (const auto& v : r.phi_values) phi.push_back(vector_json(v));
  out["phi"] = std::move(phi);
  return out;
}

OrderedJson sector_json(const SectorReport& r) {
  OrderedJson out;
  out["sampled_lambdas"] = r.sampled_lambdas;
  out["norms"] = r.norms;
  out["grid_max"] = r.grid_max;
  out["m_estimate"] = r.m_estimate;
  out["clamped"] = r.clamped;
  if (r.clamped) {
    out["note"] = "grid maximum below 1; M = 1 attained only in the limit";
  }
  return out;
}

std::string csv_projection(const OrderedJson& rep) {
  const std::string command = rep.value("command", "");
  std::ostringstream os;

  if (command == "validate") {
    os << "lambda,norm\n";
    const auto& body = rep.at("report");
    const auto& lambdas = body.at("sampled_lambdas");
    const auto& norms = body.at("norms");
    for (std::size_t i = 0; i < lambdas.size(); ++i) {
      os << num(lambdas[i].get<double>()) << ',' << num(norms[i].get<double>())
         << '\n';
    }
    return os.str();
  }

  if (command == "extend" || command == "dtn") {
    const auto& trace = command == "extend" ? rep.at("trace")
                                            : rep.at("report").at("trace");
    os << "t,quad_error";
    const std::size_t dim = trace.at("u")[0].size();
    for (std::size_t c = 0; c < dim; ++c) {
      os << ",u" << c << "_re,u" << c << "_im";
    }
    for (std::size_t c = 0; c < dim; ++c) {
      os << ",du" << c << "_re,du" << c << "_im";
    }
    os << '\n';
    const auto& ts = trace.at("t");
    for (std::size_t k = 0; k < ts.size(); ++k) {
      os << num(ts[k].get<double>()) << ','
         << num(trace.at("quad_errors")[k].get<double>());
      csv_vector_cells(os, trace.at("u")[k]);
      csv_vector_cells(os, trace.at("du")[k]);
      os << '\n';
    }
    return os.str();
  }

  if (command == "power" || command == "compare") {
    os << "route,est_error,node_count";
    const auto& routes = rep.at("routes");
    std::size_t dim = 0;
    for (const auto& [name, body] : routes.items()) {
      dim = body.at("value").size();
      break;
    }
    for (std::size_t c = 0; c < dim; ++c) os << ",v" << c << "_re,v" << c << "_im";
    os << '\n';
    for (const auto& [name, body] : routes.items()) {
      os << name << ',' << num(body.value("est_error", 0.0)) << ','
         << body.value("node_count", 0);
      csv_vector_cells(os, body.at("value"));
      os << '\n';
    }
    return os.str();
  }

  if (command == "selftest") {
    os << "index,name,pass\n";
    for (const auto& c : rep.at("criteria")) {
      os << c.at("index").get<int>() << ',' << c.at("name").get<std::string>()
         << ',' << (c.at("pass").get<bool>() ? "1" : "0") << '\n';
    }
    return os.str();
  }

  throw DomainError("csv projection: unsupported command '" + command + "'");
}

}  // namespace fracpow::report
