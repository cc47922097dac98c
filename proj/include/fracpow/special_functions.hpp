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

#include <complex>

#include "fracpow/errors.hpp"

namespace fracpow {

using Complex = std::complex<double>;

/// Principal power z^a = exp(a (ln|z| + i arg z)) with arg z in (-pi, pi).
/// Throws DomainError for z on the closed negative real axis (including 0).
Complex principal_power(Complex z, Complex a);

/// Complex gamma function, Lanczos approximation with reflection for
/// Re z < 0.5. Relative accuracy is ~1e-13 or better on |Re z| <= 5,
/// |Im z| <= 5. Throws DomainError at the poles (non-positive integers).
Complex gamma(Complex z);

/// Modified Bessel function I_nu(z) of complex order by its power series
///   I_nu(z) = sum_k (z/2)^{2k+nu} / (k! Gamma(k+nu+1)).
/// The series is truncated once a term falls below 1e-16 of the partial
/// sum. Requires |z| <= series_radius (default 30); the series loses
/// accuracy beyond that and no asymptotic continuation is provided.
Complex bessel_i(Complex order, Complex z, double series_radius = 30.0,
                 int max_terms = 400);

/// Modified Bessel function K_nu(z) of non-integer complex order via the
/// connection formula K_nu = pi/(2 sin(nu pi)) (I_{-nu} - I_nu).
/// Throws DomainError when |sin(nu pi)| < 1e-8 (near-integer order).
Complex bessel_k(Complex order, Complex z, double series_radius = 30.0);

/// Fractional exponent alpha with 0 < Re alpha < 1, together with the
/// constants derived from it that the power/extension identities use:
/// sin(alpha pi) and
///   c_alpha = Gamma(1-alpha) / (2^{2 alpha - 1} Gamma(alpha)),
/// the factor linking the Dirichlet-to-Neumann limit with the fractional
/// power (c_{1/2} = 1).
class FractionalOrder {
 public:
  explicit FractionalOrder(Complex alpha);

  Complex alpha() const { return alpha_; }
  Complex sin_pi_alpha() const { return sin_pi_alpha_; }
  Complex c_alpha() const { return c_alpha_; }
  Complex gamma_alpha() const { return gamma_alpha_; }
  double re() const { return alpha_.real(); }
  double im() const { return alpha_.imag(); }

 private:
  Complex alpha_;
  Complex sin_pi_alpha_;
  Complex c_alpha_;
  Complex gamma_alpha_;
};

}  // namespace fracpow
