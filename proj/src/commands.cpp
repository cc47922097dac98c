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

#include "fracpow/commands.hpp"

#include <utility>
#include <vector>

namespace fracpow {

using report::OrderedJson;

namespace {

double route_discrepancy(const Vector& a, const Vector& b, NormKind nk) {
  const double scale = std::max(norm_of(a, nk), norm_of(b, nk));
  const double gap = norm_of(a - b, nk);
  return scale > 0.0 ? gap / scale : gap;
}

}  // namespace

OrderedJson run_power(const Operator& op, const FractionalOrder& ord,
                      const Vector& x, double tol) {
  OrderedJson rep = report::header("power", ord.alpha(), &op);
  rep["tol"] = tol;

  OrderedJson routes;
  PowerResult bala = balakrishnan_power(op, ord, x, tol);
  routes["balakrishnan"] = report::power_json(bala);

  bool have_oracle = false;
  Vector oracle;
  try {
    oracle = spectral_power_oracle(op, ord, x);
    have_oracle = true;
    PowerResult r;
    r.value = oracle;
    r.route = Route::kSpectralOracle;
    routes["spectral_oracle"] = report::power_json(r);
  } catch (const SolveError& e) {
    routes["spectral_oracle"] = OrderedJson{{"refused", e.what()}};
  }
  rep["routes"] = std::move(routes);

  OrderedJson disc;
  if (have_oracle) {
    disc["balakrishnan_vs_spectral_oracle"] =
        route_discrepancy(bala.value, oracle, op.norm_kind());
  }
  rep["discrepancies"] = std::move(disc);
  return rep;
}

OrderedJson run_extend(const Operator& op, const FractionalOrder& ord,
                       const Vector& x, double t0, double ratio, int steps,
                       double tol) {
  OrderedJson rep = report::header("extend", ord.alpha(), &op);
  rep["params"] = OrderedJson{{"t0", t0}, {"ratio", ratio}, {"steps", steps}, {"tol", tol}};
  rep["trace"] = report::trace_json(extension_trace(op, ord, x, t0, ratio, steps, tol));
  return rep;
}

OrderedJson run_dtn(const Operator& op, const FractionalOrder& ord,
                    const Vector& x, const DtnParams& params) {
  OrderedJson rep = report::header("dtn", ord.alpha(), &op);
  rep["params"] = OrderedJson{{"t0", params.t0},
                              {"ratio", params.ratio},
                              {"steps", params.steps},
                              {"tol", params.tol},
                              {"pass_tol", params.pass_tol}};
  rep["report"] = report::dtn_json(dtn_extract(op, ord, x, params), ord);
  return rep;
}

OrderedJson run_compare(const Operator& op, const FractionalOrder& ord,
                        const Vector& x, double tol,
                        const DtnParams& dtn_params) {
  OrderedJson rep = report::header("compare", ord.alpha(), &op);
  rep["tol"] = tol;
  const NormKind nk = op.norm_kind();

  std::vector<std::pair<std::string, Vector>> powers;

  OrderedJson routes;
  PowerResult bala = balakrishnan_power(op, ord, x, tol);
  routes["balakrishnan"] = report::power_json(bala);
  powers.emplace_back("balakrishnan", bala.value);

  ShiftedPowerResult shifted = shifted_power(op, ord, x);
  routes["shifted_limit"] = report::shifted_json(shifted);
  powers.emplace_back("shifted_limit", shifted.power.value);

  try {
    Vector oracle = spectral_power_oracle(op, ord, x);
    PowerResult r;
    r.value = oracle;
    r.route = Route::kSpectralOracle;
    routes["spectral_oracle"] = report::power_json(r);
    powers.emplace_back("spectral_oracle", std::move(oracle));
  } catch (const SolveError& e) {
    routes["spectral_oracle"] = OrderedJson{{"refused", e.what()}};
  }

  DtnReport dtn = dtn_extract(op, ord, x, dtn_params);
  {
    PowerResult r;
    // The DtN limit approximates c_alpha A^alpha x; report the unscaled
    // fractional power for side-by-side comparison.
    r.value = dtn.extrapolated_limit / ord.c_alpha();
    r.route = Route::kDtn;
    r.est_error = dtn.rel_error;
    OrderedJson dtn_route = report::power_json(r);
    dtn_route["fitted_exponent"] = dtn.fitted_exponent;
    dtn_route["c_alpha"] = report::complex_json(ord.c_alpha());
    routes["dtn"] = std::move(dtn_route);
    powers.emplace_back("dtn", r.value);
  }
  rep["routes"] = std::move(routes);

  OrderedJson disc;
  double worst = 0.0;
  for (std::size_t i = 0; i < powers.size(); ++i) {
    for (std::size_t j = i + 1; j < powers.size(); ++j) {
      const double d = route_discrepancy(powers[i].second, powers[j].second, nk);
      disc[powers[i].first + "_vs_" + powers[j].first] = d;
      // The shifted route resolves the limit only to its own est_error;
      // exclude it from the tolerance verdict.
      if (powers[i].first != "shifted_limit" && powers[j].first != "shifted_limit") {
        worst = std::max(worst, d);
      }
    }
  }
  rep["discrepancies"] = std::move(disc);
  rep["max_discrepancy"] = worst;
  rep["pass"] = worst <= dtn_params.pass_tol;
  rep["pass_tol"] = dtn_params.pass_tol;
  return rep;
}

OrderedJson run_validate(const Operator& op) {
  OrderedJson rep = report::header("validate", Complex(0.0, 0.0), &op);
  rep.erase("alpha");
  rep["report"] = report::sector_json(validate_nonnegativity(op));
  return rep;
}

}  // namespace fracpow
