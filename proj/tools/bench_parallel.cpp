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

// Compares the serial reference node loops against the OpenMP kernels on
// representative workloads and reports timings plus the max |difference|
// between the two results (expected: exactly 0).

#include <chrono>
#include <cstdio>
#include <random>

#include "fracpow/balakrishnan.hpp"
#include "fracpow/extension.hpp"

using namespace fracpow;

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

Vector random_vector(std::mt19937_64& rng, Eigen::Index n) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Vector x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = Complex(u(rng), u(rng));
  return x;
}

struct Timed {
  Vector value;
  double seconds;
};

template <typename F>
Timed timed(const F& f) {
  const auto t0 = std::chrono::steady_clock::now();
  Vector v = f();
  return {std::move(v), seconds_since(t0)};
}

void row(const char* name, const Timed& serial, const Timed& parallel) {
  const double diff = (serial.value - parallel.value).cwiseAbs().maxCoeff();
  std::printf("%-28s %10.3f ms %10.3f ms %8.2fx   max|diff| = %g\n", name,
              1e3 * serial.seconds, 1e3 * parallel.seconds,
              serial.seconds / parallel.seconds, diff);
}

}  // namespace

int main() {
  std::mt19937_64 rng(42);
  std::printf("%-28s %13s %13s %9s\n", "workload", "serial", "openmp",
              "speedup");

  {
    const Laplacian1d op(96, 1.0 / 97.0);
    const FractionalOrder ord(Complex(0.35, 0.0));
    const Vector x = random_vector(rng, op.dim());
    const auto run = [&](ExecPolicy p) {
      return balakrishnan_power(op, ord, x, 1e-10, p).value;
    };
    row("balakrishnan lap n=96",
        timed([&] { return run(ExecPolicy::kSerial); }),
        timed([&] { return run(ExecPolicy::kOpenMP); }));
  }

  {
    const Laplacian1d op(48, 1.0 / 49.0);
    const FractionalOrder ord(Complex(0.5, 0.0));
    const Vector x = random_vector(rng, op.dim());
    const auto run = [&](ExecPolicy p) {
      return extension_value(op, ord, x, 0.5, 1e-10, p).value;
    };
    row("extension lap n=48 (expm)",
        timed([&] { return run(ExecPolicy::kSerial); }),
        timed([&] { return run(ExecPolicy::kOpenMP); }));
  }

  {
    std::uniform_real_distribution<double> u(0.1, 9.0);
    Vector f(20000);
    for (Eigen::Index i = 0; i < f.size(); ++i) f(i) = u(rng);
    const MultiplicationOperator op(f, 0.0);
    const FractionalOrder ord(Complex(0.25, 0.1));
    const Vector x = random_vector(rng, f.size());
    const auto run = [&](ExecPolicy p) {
      return extension_derivative(op, ord, x, 0.25, 1e-10, true, p).value;
    };
    row("derivative mult n=20000",
        timed([&] { return run(ExecPolicy::kSerial); }),
        timed([&] { return run(ExecPolicy::kOpenMP); }));
  }

  return 0;
}
