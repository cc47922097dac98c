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

#include "fracpow/special_functions.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace fracpow {

namespace {

constexpr double kPi = std::numbers::pi;

bool on_closed_negative_axis(Complex z) {
  return z.imag() == 0.0 && z.real() <= 0.0;
}

// Lanczos coefficients for g = 607/128, n = 15 (Godfrey's set).
constexpr double kLanczosG = 607.0 / 128.0;
constexpr double kLanczos[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    3.3994649984811888699e-5,
    4.6523628927048575665e-5,   -9.8374475304879564677e-5,
    1.5808870322491248884e-4,   -2.1026444172410488319e-4,
    2.1743961811521264320e-4,   -1.6431810653676389022e-4,
    8.4418223983852743293e-5,   -2.6190838401581408670e-5,
    3.6899182659531622704e-6,
};

// log Gamma on Re z >= 0.5.
Complex log_gamma_core(Complex z) {
  z -= 1.0;
  Complex sum = kLanczos[0];
  for (int i = 1; i < 15; ++i) sum += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * kPi) + (z + 0.5) * std::log(t) - t + std::log(sum);
}

bool is_nonpositive_integer(Complex z) {
  if (z.imag() != 0.0) return false;
  const double r = z.real();
  return r <= 0.0 && r == std::floor(r);
}

}  // namespace

Complex principal_power(Complex z, Complex a) {
  if (on_closed_negative_axis(z)) {
    std::ostringstream os;
    os << "principal_power: base " << z << " lies on the closed negative real axis";
    throw DomainError(os.str());
  }
  if (a == Complex(0.0, 0.0)) return Complex(1.0, 0.0);
  // exp(a (ln|z| + i arg z)); std::log already takes the principal branch.
  return std::exp(a * std::log(z));
}

Complex gamma(Complex z) {
  if (is_nonpositive_integer(z)) {
    std::ostringstream os;
    os << "gamma: pole at non-positive integer " << z;
    throw DomainError(os.str());
  }
  if (z.real() < 0.5) {
    // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
    return kPi / (std::sin(kPi * z) * std::exp(log_gamma_core(1.0 - z)));
  }
  return std::exp(log_gamma_core(z));
}

Complex bessel_i(Complex order, Complex z, double series_radius, int max_terms) {
  if (std::abs(z) > series_radius) {
    std::ostringstream os;
    os << "bessel_i: |z| = " << std::abs(z) << " exceeds series radius "
       << series_radius;
    throw DomainError(os.str());
  }
  if (is_nonpositive_integer(order + 1.0)) {
    throw DomainError("bessel_i: order must not be a negative integer");
  }
  if (z == Complex(0.0, 0.0)) {
    if (order == Complex(0.0, 0.0)) return Complex(1.0, 0.0);
    if (order.real() > 0.0) return Complex(0.0, 0.0);
    throw DomainError("bessel_i: z = 0 with Re(order) <= 0");
  }
  // term_0 = (z/2)^order / Gamma(order+1), term_k = term_{k-1} z^2/4 / (k (k+order))
  Complex term = principal_power(0.5 * z, order) / gamma(order + 1.0);
  Complex sum = term;
  const Complex q = 0.25 * z * z;
  for (int k = 1; k <= max_terms; ++k) {
    term *= q / (static_cast<double>(k) * (static_cast<double>(k) + order));
    sum += term;
    if (std::abs(term) <= 1e-16 * std::abs(sum)) return sum;
  }
  std::ostringstream os;
  os << "bessel_i: series did not converge within " << max_terms << " terms";
  throw ConvergenceError(os.str());
}

Complex bessel_k(Complex order, Complex z, double series_radius) {
  const Complex s = std::sin(order * kPi);
  if (std::abs(s) < 1e-8) {
    std::ostringstream os;
    os << "bessel_k: order " << order << " too close to an integer for the "
       << "connection formula";
    throw DomainError(os.str());
  }
  if (on_closed_negative_axis(z)) {
    throw DomainError("bessel_k: z on the closed negative real axis");
  }
  return kPi / (2.0 * s) *
         (bessel_i(-order, z, series_radius) - bessel_i(order, z, series_radius));
}

FractionalOrder::FractionalOrder(Complex alpha) : alpha_(alpha) {
  if (!(alpha.real() > 0.0 && alpha.real() < 1.0) || !std::isfinite(alpha.real()) ||
      !std::isfinite(alpha.imag())) {
    std::ostringstream os;
    os << "FractionalOrder: need 0 < Re alpha < 1, got " << alpha;
    throw DomainError(os.str());
  }
  sin_pi_alpha_ = std::sin(kPi * alpha_);
  gamma_alpha_ = gamma(alpha_);
  c_alpha_ = gamma(1.0 - alpha_) /
             (principal_power(2.0, 2.0 * alpha_ - 1.0) * gamma_alpha_);
}

}  // namespace fracpow
