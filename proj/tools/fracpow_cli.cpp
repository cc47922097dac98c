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

// Command-line front end: loads operator specs, runs the fractional-power
// routes and emits machine-readable convergence reports.
//
//   fracpow power    --op op.json --alpha 0.5 --vector "[1,0,0]"
//   fracpow extend   --op op.json --alpha 0.5 --vector v.json --t0 1 --steps 8
//   fracpow dtn      --op op.json --alpha 0.25 --vector "[1,0,0]"
//   fracpow compare  --op op.json --alpha 0.5 --vector "[1,0,0]"
//   fracpow validate --op op.json
//   fracpow selftest
//
// Exit codes: 0 success, 1 numerical failure, 2 spec/parse error,
// 3 acceptance failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fracpow/acceptance.hpp"
#include "fracpow/commands.hpp"
#include "fracpow/operator_io.hpp"

namespace {

using fracpow::Complex;
using fracpow::Vector;
using OrderedJson = fracpow::report::OrderedJson;

Complex parse_alpha(const std::string& text) {
  std::istringstream is(text);
  double re = 0.0, im = 0.0;
  char comma = 0;
  if (!(is >> re)) throw fracpow::DomainError("cannot parse --alpha: " + text);
  if (is >> comma) {
    if (comma != ',' || !(is >> im)) {
      throw fracpow::DomainError("cannot parse --alpha: " + text);
    }
  }
  return {re, im};
}

Vector parse_vector_arg(const std::string& arg) {
  nlohmann::json j;
  if (!arg.empty() && arg.front() == '[') {
    j = nlohmann::json::parse(arg);
  } else {
    std::ifstream in(arg);
    if (!in) throw fracpow::DomainError("cannot open vector file: " + arg);
    in >> j;
  }
  return fracpow::vector_from_json(j);
}

void emit(const OrderedJson& rep, const std::string& format, std::ostream& out) {
  if (format == "csv") {
    out << fracpow::report::csv_projection(rep);
  } else {
    out << rep.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fractional powers of non-negative operators: Balakrishnan "
               "quadrature and Dirichlet-to-Neumann extraction"};
  app.require_subcommand(1);

  std::string op_path, alpha_text = "0.5", vector_arg, format = "json";
  double tol = 1e-8;
  double t0 = 1.0, ratio = 0.5;
  int steps = 8;
  double pass_tol = 1e-4;
  bool timings = false;

  const auto add_common = [&](CLI::App* cmd, bool needs_vector) {
    cmd->add_option("--op", op_path, "operator spec file (JSON)")->required();
    cmd->add_option("--alpha", alpha_text, "fractional exponent re[,im]");
    if (needs_vector) {
      cmd->add_option("--vector", vector_arg,
                      "input vector: inline JSON array or a file path")
          ->required();
    }
    cmd->add_option("--tol", tol, "quadrature tolerance");
    cmd->add_option("--format", format, "output format: json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_flag("--timings", timings,
                  "append wall-time per stage (makes reports run-dependent)");
  };

  CLI::App* power = app.add_subcommand("power", "fractional power A^alpha x");
  add_common(power, true);

  CLI::App* extend = app.add_subcommand("extend", "extension trace U(t) x");
  add_common(extend, true);
  extend->add_option("--t0", t0, "largest t of the geometric grid");
  extend->add_option("--ratio", ratio, "grid ratio in (0,1)");
  extend->add_option("--steps", steps, "number of grid points");

  CLI::App* dtn = app.add_subcommand("dtn", "Dirichlet-to-Neumann limit report");
  add_common(dtn, true);
  dtn->add_option("--t0", t0, "largest t of the geometric grid");
  dtn->add_option("--ratio", ratio, "grid ratio in (0,1)");
  dtn->add_option("--steps", steps, "number of grid points");
  dtn->add_option("--pass-tol", pass_tol, "limit-vs-reference pass threshold");

  CLI::App* compare = app.add_subcommand("compare", "all routes side by side");
  add_common(compare, true);
  compare->add_option("--t0", t0, "largest t of the DtN grid");
  compare->add_option("--ratio", ratio, "DtN grid ratio in (0,1)");
  compare->add_option("--steps", steps, "DtN grid points");
  compare->add_option("--pass-tol", pass_tol, "route agreement threshold");

  CLI::App* validate = app.add_subcommand("validate", "non-negativity report");
  validate->add_option("--op", op_path, "operator spec file (JSON)")->required();
  validate->add_option("--format", format, "output format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* selftest =
      app.add_subcommand("selftest", "run the full verification suite");
  selftest->add_option("--format", format, "output format: json|csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI11_PARSE(app, argc, argv);

  try {
    const auto started = std::chrono::steady_clock::now();

    if (selftest->parsed()) {
      fracpow::acceptance::Outcome outcome =
          fracpow::acceptance::run_suite(std::cerr);
      emit(fracpow::acceptance::suite_report(outcome), format, std::cout);
      return outcome.all_pass ? 0 : 3;
    }

    auto op = fracpow::load_operator(op_path);
    if (validate->parsed()) {
      emit(fracpow::run_validate(*op), format, std::cout);
      return 0;
    }

    const Complex alpha = parse_alpha(alpha_text);
    const fracpow::FractionalOrder ord(alpha);
    if (!(tol > 0.0)) throw fracpow::DomainError("--tol must be > 0");
    Vector x = parse_vector_arg(vector_arg);
    if (x.size() != op->dim()) {
      throw fracpow::DimensionError("--vector length does not match operator dim");
    }

    fracpow::DtnParams dtn_params;
    dtn_params.t0 = t0;
    dtn_params.ratio = ratio;
    dtn_params.steps = steps;
    dtn_params.tol = std::min(tol, 1e-9);
    dtn_params.pass_tol = pass_tol;

    OrderedJson rep;
    if (power->parsed()) {
      rep = fracpow::run_power(*op, ord, x, tol);
    } else if (extend->parsed()) {
      rep = fracpow::run_extend(*op, ord, x, t0, ratio, steps, tol);
    } else if (dtn->parsed()) {
      rep = fracpow::run_dtn(*op, ord, x, dtn_params);
    } else if (compare->parsed()) {
      rep = fracpow::run_compare(*op, ord, x, tol, dtn_params);
    }

    if (timings) {
      const auto elapsed = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - started)
                               .count();
      rep["timings"] = OrderedJson{{"total_seconds", elapsed}};
    }
    emit(rep, format, std::cout);
    return 0;
  } catch (const fracpow::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fracpow::DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const fracpow::Error& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 1;
  }
}
