// Copyright 2026 The readgrade Authors.
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

// Reference kernels. The striped accumulation order here defines the exact
// result every SIMD variant must reproduce.

#include <cstddef>

#include "readgrade/kernels.hpp"

namespace readgrade::kernels::scalar {

double dot(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  const std::size_t body = n - n % 4;
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < body; i += 4) {
    for (std::size_t lane = 0; lane < 4; ++lane) {
      const double p = a[i + lane] * b[i + lane];
      acc[lane] = acc[lane] + p;
    }
  }
  double total = (acc[0] + acc[1]) + (acc[2] + acc[3]);
  for (std::size_t i = body; i < n; ++i) {
    const double p = a[i] * b[i];
    total = total + p;
  }
  return total;
}

double sum(std::span<const double> a) {
  const std::size_t n = a.size();
  const std::size_t body = n - n % 4;
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < body; i += 4) {
    for (std::size_t lane = 0; lane < 4; ++lane) acc[lane] += a[i + lane];
  }
  double total = (acc[0] + acc[1]) + (acc[2] + acc[3]);
  for (std::size_t i = body; i < n; ++i) total += a[i];
  return total;
}

double sum_squared_diff(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  const std::size_t body = n - n % 4;
  double acc[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < body; i += 4) {
    for (std::size_t lane = 0; lane < 4; ++lane) {
      const double d = a[i + lane] - b[i + lane];
      const double sq = d * d;
      acc[lane] = acc[lane] + sq;
    }
  }
  double total = (acc[0] + acc[1]) + (acc[2] + acc[3]);
  for (std::size_t i = body; i < n; ++i) {
    const double d = a[i] - b[i];
    const double sq = d * d;
    total = total + sq;
  }
  return total;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    const double p = alpha * x[i];
    y[i] = y[i] + p;
  }
}

std::uint64_t concordant_pairs(std::span<const double> a,
                               std::span<const double> b) {
  const std::size_t n = a.size();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double da = a[i] - a[j];
      const double db = b[i] - b[j];
      if ((da > 0.0 && db > 0.0) || (da < 0.0 && db < 0.0)) ++count;
    }
  }
  return count;
}

}  // namespace readgrade::kernels::scalar
