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

// AVX2 kernels. Compiled with -mavx2 only (no FMA) so products round
// exactly as in the scalar reference.

#include <immintrin.h>

#include <bit>
#include <cstddef>

#include "readgrade/kernels.hpp"

namespace readgrade::kernels::avx2 {
namespace {

inline double combine(__m256d acc) {
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  return (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
}

}  // namespace

double dot(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  const std::size_t body = n - n % 4;
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < body; i += 4) {
    const __m256d va = _mm256_loadu_pd(a.data() + i);
    const __m256d vb = _mm256_loadu_pd(b.data() + i);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(va, vb));
  }
  double total = combine(acc);
  for (std::size_t i = body; i < n; ++i) {
    const double p = a[i] * b[i];
    total = total + p;
  }
  return total;
}

double sum(std::span<const double> a) {
  const std::size_t n = a.size();
  const std::size_t body = n - n % 4;
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < body; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_loadu_pd(a.data() + i));
  }
  double total = combine(acc);
  for (std::size_t i = body; i < n; ++i) total += a[i];
  return total;
}

double sum_squared_diff(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  const std::size_t body = n - n % 4;
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < body; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a.data() + i),
                                    _mm256_loadu_pd(b.data() + i));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
  }
  double total = combine(acc);
  for (std::size_t i = body; i < n; ++i) {
    const double d = a[i] - b[i];
    const double sq = d * d;
    total = total + sq;
  }
  return total;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size();
  const std::size_t body = n - n % 4;
  const __m256d va = _mm256_set1_pd(alpha);
  for (std::size_t i = 0; i < body; i += 4) {
    const __m256d p = _mm256_mul_pd(va, _mm256_loadu_pd(x.data() + i));
    _mm256_storeu_pd(y.data() + i, _mm256_add_pd(_mm256_loadu_pd(y.data() + i), p));
  }
  for (std::size_t i = body; i < n; ++i) {
    const double p = alpha * x[i];
    y[i] = y[i] + p;
  }
}

std::uint64_t concordant_pairs(std::span<const double> a,
                               std::span<const double> b) {
  const std::size_t n = a.size();
  const __m256d zero = _mm256_setzero_pd();
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const __m256d ai = _mm256_set1_pd(a[i]);
    const __m256d bi = _mm256_set1_pd(b[i]);
    std::size_t j = i + 1;
    for (; j + 4 <= n; j += 4) {
      const __m256d da = _mm256_sub_pd(ai, _mm256_loadu_pd(a.data() + j));
      const __m256d db = _mm256_sub_pd(bi, _mm256_loadu_pd(b.data() + j));
      const __m256d both_pos = _mm256_and_pd(_mm256_cmp_pd(da, zero, _CMP_GT_OQ),
                                             _mm256_cmp_pd(db, zero, _CMP_GT_OQ));
      const __m256d both_neg = _mm256_and_pd(_mm256_cmp_pd(da, zero, _CMP_LT_OQ),
                                             _mm256_cmp_pd(db, zero, _CMP_LT_OQ));
      const int mask = _mm256_movemask_pd(_mm256_or_pd(both_pos, both_neg));
      count += static_cast<std::uint64_t>(std::popcount(static_cast<unsigned>(mask)));
    }
    for (; j < n; ++j) {
      const double da = a[i] - a[j];
      const double db = b[i] - b[j];
      if ((da > 0.0 && db > 0.0) || (da < 0.0 && db < 0.0)) ++count;
    }
  }
  return count;
}

}  // namespace readgrade::kernels::avx2
