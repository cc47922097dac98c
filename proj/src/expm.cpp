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

#include "fracpow/expm.hpp"

#include <cmath>

namespace fracpow {

namespace {

using Eigen::MatrixXcd;

// Pade numerators p_m(A); the denominator is p_m(-A).
MatrixXcd pade_u_v_solve(const MatrixXcd& a, const double* b, int m_half,
                         MatrixXcd* even_powers) {
  // even_powers[i] = A^{2i}, i = 0..m_half
  const Eigen::Index n = a.rows();
  MatrixXcd u = MatrixXcd::Zero(n, n);
  MatrixXcd v = MatrixXcd::Zero(n, n);
  for (int i = 0; i <= m_half; ++i) {
    u += b[2 * i + 1] * even_powers[i];
    v += b[2 * i] * even_powers[i];
  }
  u = a * u;
  // exp(A) ~ (v - u)^{-1} (v + u)
  return (v - u).partialPivLu().solve(v + u);
}

MatrixXcd pade13(const MatrixXcd& a) {
  static const double b[14] = {
      64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
      1187353796428800.0,  129060195264000.0,   10559470521600.0,
      670442572800.0,      33522128640.0,       1323241920.0,
      40840800.0,          960960.0,            16380.0,
      182.0,               1.0};
  const Eigen::Index n = a.rows();
  const MatrixXcd a2 = a * a;
  const MatrixXcd a4 = a2 * a2;
  const MatrixXcd a6 = a2 * a4;
  const MatrixXcd id = MatrixXcd::Identity(n, n);
  MatrixXcd u =
      a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
           b[3] * a2 + b[1] * id);
  MatrixXcd v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) + b[6] * a6 +
                b[4] * a4 + b[2] * a2 + b[0] * id;
  return (v - u).partialPivLu().solve(v + u);
}

}  // namespace

Eigen::MatrixXcd matrix_exponential(const Eigen::MatrixXcd& a) {
  static const double theta3 = 1.495585217958292e-2;
  static const double theta5 = 2.539398330063230e-1;
  static const double theta7 = 9.504178996162932e-1;
  static const double theta9 = 2.097847961257068;
  static const double theta13 = 5.371920351148152;

  const Eigen::Index n = a.rows();
  const MatrixXcd id = MatrixXcd::Identity(n, n);
  const double norm = a.cwiseAbs().colwise().sum().maxCoeff();  // 1-norm

  if (norm <= theta9) {
    MatrixXcd even[5];
    even[0] = id;
    even[1] = a * a;
    if (norm <= theta3) {
      static const double b[4] = {120.0, 60.0, 12.0, 1.0};
      return pade_u_v_solve(a, b, 1, even);
    }
    even[2] = even[1] * even[1];
    if (norm <= theta5) {
      static const double b[6] = {30240.0, 15120.0, 3360.0, 420.0, 30.0, 1.0};
      return pade_u_v_solve(a, b, 2, even);
    }
    even[3] = even[2] * even[1];
    if (norm <= theta7) {
      static const double b[8] = {17297280.0, 8648640.0, 1995840.0, 277200.0,
                                  25200.0,    1512.0,    56.0,      1.0};
      return pade_u_v_solve(a, b, 3, even);
    }
    even[4] = even[3] * even[1];
    static const double b[10] = {17643225600.0, 8821612800.0, 2075673600.0,
                                 302702400.0,   30270240.0,   2162160.0,
                                 110880.0,      3960.0,       90.0,
                                 1.0};
    return pade_u_v_solve(a, b, 4, even);
  }

  // Scale down by 2^s, degree-13 Pade, square s times.
  const int s = std::max(0, static_cast<int>(std::ceil(std::log2(norm / theta13))));
  MatrixXcd result = pade13(a / std::pow(2.0, s));
  for (int i = 0; i < s; ++i) result = result * result;
  return result;
}

}  // namespace fracpow
