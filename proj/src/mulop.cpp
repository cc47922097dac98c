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

#include "fracpow/mulop.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace fracpow {

namespace {

double fit_slope(const std::vector<double>& log_x,
                 const std::vector<double>& log_y) {
  if (log_x.size() < 2) return std::numeric_limits<double>::quiet_NaN();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  const double n = static_cast<double>(log_x.size());
  for (std::size_t i = 0; i < log_x.size(); ++i) {
    sx += log_x[i];
    sy += log_y[i];
    sxx += log_x[i] * log_x[i];
    sxy += log_x[i] * log_y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

void check_grid_sizes(const SymbolGrid& sym, const Vector& g) {
  if (g.size() != sym.size()) {
    throw DimensionError("mulop: symbol grid and data vector sizes differ");
  }
}

}  // namespace

void SymbolGrid::validate() const {
  if (values.size() == 0) throw DimensionError("SymbolGrid: empty grid");
  if (!points.empty() &&
      static_cast<Eigen::Index>(points.size()) != values.size()) {
    throw DimensionError("SymbolGrid: points/values length mismatch");
  }
  if (!(sector_angle >= 0.0 && sector_angle <= 1.5707963267948967)) {
    throw DomainError("SymbolGrid: sector angle must be in [0, pi/2]");
  }
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    const Complex f = values(i);
    if (!std::isfinite(f.real()) || !std::isfinite(f.imag())) {
      throw DomainError("SymbolGrid: symbol values must be finite");
    }
    if (f != Complex(0.0, 0.0) && std::abs(std::arg(f)) > sector_angle + 1e-12) {
      std::ostringstream os;
      os << "SymbolGrid: value " << f << " outside sector |arg z| <= "
         << sector_angle;
      throw DomainError(os.str());
    }
  }
}

SymbolGrid symbol_grid_of(const MultiplicationOperator& op) {
  SymbolGrid sym;
  sym.points = op.points();
  sym.values = op.symbol();
  sym.sector_angle = op.sector_angle();
  return sym;
}

Vector closed_form_extension(const SymbolGrid& sym, const FractionalOrder& ord,
                             const Vector& g, double t) {
  check_grid_sizes(sym, g);
  if (!(t > 0.0)) throw DomainError("closed_form_extension: t must be > 0");
  Vector u(sym.size());
  const Complex alpha = ord.alpha();
  for (Eigen::Index i = 0; i < sym.size(); ++i) {
    const Complex f = sym.values(i);
    if (f == Complex(0.0, 0.0)) {
      u(i) = g(i);  // T(r) = id at this point; the s-integral normalizes to 1
      continue;
    }
    const Complex z = t * principal_power(f, 0.5);
    u(i) = 2.0 * g(i) / ord.gamma_alpha() * principal_power(0.5 * z, alpha) *
           bessel_k(alpha, z);
  }
  return u;
}

Vector closed_form_extension_derivative(const SymbolGrid& sym,
                                        const FractionalOrder& ord,
                                        const Vector& g, double t) {
  check_grid_sizes(sym, g);
  if (!(t > 0.0)) throw DomainError("closed_form_extension_derivative: t must be > 0");
  Vector du(sym.size());
  const Complex alpha = ord.alpha();
  for (Eigen::Index i = 0; i < sym.size(); ++i) {
    const Complex f = sym.values(i);
    if (f == Complex(0.0, 0.0)) {
      du(i) = 0.0;  // u is constant in t at zero-symbol points
      continue;
    }
    const Complex root = principal_power(f, 0.5);
    const Complex z = t * root;
    du(i) = -2.0 * g(i) / ord.gamma_alpha() * root *
            principal_power(0.5 * z, alpha) * bessel_k(alpha - 1.0, z);
  }
  return du;
}

Vector closed_form_power(const SymbolGrid& sym, const FractionalOrder& ord,
                         const Vector& g) {
  check_grid_sizes(sym, g);
  Vector y(sym.size());
  for (Eigen::Index i = 0; i < sym.size(); ++i) {
    const Complex f = sym.values(i);
    y(i) = (f == Complex(0.0, 0.0)) ? Complex(0.0, 0.0)
                                    : principal_power(f, ord.alpha()) * g(i);
  }
  return y;
}

AsymptoticsReport small_t_asymptotics_check(const SymbolGrid& sym,
                                            const FractionalOrder& ord,
                                            const Vector& g,
                                            const std::vector<double>& t_grid) {
  check_grid_sizes(sym, g);
  if (t_grid.size() < 4) {
    throw DomainError("small_t_asymptotics_check: need at least 4 grid points");
  }
  for (std::size_t k = 0; k + 1 < t_grid.size(); ++k) {
    if (!(t_grid[k] > t_grid[k + 1]) || !(t_grid.back() > 0.0)) {
      throw DomainError("small_t_asymptotics_check: t_grid must decrease and stay positive");
    }
  }

  const std::size_t steps = t_grid.size();
  const Eigen::Index n = sym.size();
  const Complex alpha = ord.alpha();

  AsymptoticsReport report;
  report.t_grid = t_grid;
  report.boundary_target = g;
  report.dtn_target = ord.c_alpha() * closed_form_power(sym, ord, g).eval();

  std::vector<Vector> u(steps), phi(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    const double t = t_grid[k];
    u[k] = closed_form_extension(sym, ord, g, t);
    phi[k] = -principal_power(t, 1.0 - 2.0 * alpha) *
             closed_form_extension_derivative(sym, ord, g, t);
  }

  // Per-point extrapolation of phi with the t^{2-2 alpha} correction model.
  const std::size_t window = std::min<std::size_t>(steps, std::max<std::size_t>(4, steps - 2));
  const std::size_t first = steps - window;
  const Complex corr_exp = 2.0 - 2.0 * alpha;
  Complex s01(0.0, 0.0);
  double s11 = 0.0;
  std::vector<Complex> basis(window);
  for (std::size_t i = 0; i < window; ++i) {
    basis[i] = principal_power(t_grid[first + i], corr_exp);
    s01 += basis[i];
    s11 += std::norm(basis[i]);
  }
  const double m = static_cast<double>(window);
  const double det = m * s11 - std::norm(s01);

  report.dtn_limit = Vector(n);
  report.boundary_rates.assign(n, 0.0);
  report.dtn_rates.assign(n, 0.0);

  for (Eigen::Index i = 0; i < n; ++i) {
    Complex r0(0.0, 0.0), r1(0.0, 0.0);
    for (std::size_t k = 0; k < window; ++k) {
      const Complex v = phi[first + k](i);
      r0 += v;
      r1 += std::conj(basis[k]) * v;
    }
    const Complex limit = (s11 * r0 - s01 * r1) / det;
    report.dtn_limit(i) = limit;

    const double g_scale = std::max(1.0, std::abs(g(i)));
    std::vector<double> lt_b, le_b, lt_d, le_d;
    for (std::size_t k = 0; k < steps; ++k) {
      const double eb = std::abs(u[k](i) - g(i));
      if (eb > 1e-12 * g_scale) {
        lt_b.push_back(std::log(t_grid[k]));
        le_b.push_back(std::log(eb));
      }
      const double ed = std::abs(phi[k](i) - limit);
      if (k >= first && ed > 1e-11 * std::max(1.0, std::abs(limit))) {
        lt_d.push_back(std::log(t_grid[k]));
        le_d.push_back(std::log(ed));
      }
    }
    const bool constant_point = sym.values(i) == Complex(0.0, 0.0);
    if (!constant_point && (lt_b.size() < 2 || lt_d.size() < 2)) {
      std::ostringstream os;
      os << "small_t_asymptotics_check: rate fit failed at grid point " << i
         << " (residuals below the noise floor)";
      throw ConvergenceError(os.str());
    }
    report.boundary_rates[i] = fit_slope(lt_b, le_b);
    report.dtn_rates[i] = fit_slope(lt_d, le_d);

    report.max_boundary_gap =
        std::max(report.max_boundary_gap, std::abs(u[steps - 1](i) - g(i)));
    const double target_scale = std::abs(report.dtn_target(i));
    const double gap = std::abs(limit - report.dtn_target(i));
    report.max_dtn_rel_error = std::max(
        report.max_dtn_rel_error, target_scale > 0.0 ? gap / target_scale : gap);
  }
  return report;
}

ShiftDecay shift_decay(const SymbolGrid& sym, const FractionalOrder& ord,
                       const Vector& g, const std::vector<double>& eps_grid) {
  check_grid_sizes(sym, g);
  ShiftDecay decay;
  decay.eps = eps_grid;
  std::vector<double> log_eps, log_gap;
  for (double eps : eps_grid) {
    if (!(eps > 0.0)) throw DomainError("shift_decay: eps must be > 0");
    double sup = 0.0;
    for (Eigen::Index i = 0; i < sym.size(); ++i) {
      const Complex f = sym.values(i);
      const Complex shifted = principal_power(f + eps, ord.alpha());
      const Complex base = (f == Complex(0.0, 0.0))
                               ? Complex(0.0, 0.0)
                               : principal_power(f, ord.alpha());
      sup = std::max(sup, std::abs((shifted - base) * g(i)));
    }
    decay.sup_gaps.push_back(sup);
    if (sup > 0.0) {
      log_eps.push_back(std::log(eps));
      log_gap.push_back(std::log(sup));
    }
  }
  decay.fitted_exponent = fit_slope(log_eps, log_gap);
  return decay;
}

}  // namespace fracpow
