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

// NEON kernels. Two float64x2 accumulators hold lanes {0,1} and {2,3} of the
// scalar reference's four striped sums. vmulq/vaddq are used instead of vfmaq
// to keep rounding identical.

#include <arm_neon.h>

#include <cstddef>

#include "readgrade/kernels.hpp"

namespace readgrade::kernels::neon {
namespace {

inline double combine(float64x2_t lo, float64x2_t hi) {
  const double s0 = vgetq_lane_f64(lo, 0);
  const double s1 = vgetq_lane_f64(lo, 1);
  const double s2 = vgetq_lane_f64(hi, 0);
  const double s3 = vgetq_lane_f64(hi, 1);
  return (s0 + s1) + (s2 + s3);
}

}  // namespace

double dot(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  const std::size_t body = n - n % 4;
  float64x2_t lo = vdupq_n_f64(0.0);
  float64x2_t hi = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < body; i += 4) {
    lo = vaddq_f64(lo, vmulq_f64(vld1q_f64(a.data() + i), vld1q_f64(b.data() + i)));
    hi = vaddq_f64(hi, vmulq_f64(vld1q_f64(a.data() + i + 2),
                                 vld1q_f64(b.data() + i + 2)));
  }
  double total = combine(lo, hi);
  for (std::size_t i = body; i < n; ++i) {
    const double p = a[i] * b[i];
    total = total + p;
  }
  return total;
}

double sum(std::span<const double> a) {
  const std::size_t n = a.size();
  const std::size_t body = n - n % 4;
  float64x2_t lo = vdupq_n_f64(0.0);
  float64x2_t hi = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < body; i += 4) {
    lo = vaddq_f64(lo, vld1q_f64(a.data() + i));
    hi = vaddq_f64(hi, vld1q_f64(a.data() + i + 2));
  }
  double total = combine(lo, hi);
  for (std::size_t i = body; i < n; ++i) total += a[i];
  return total;
}

double sum_squared_diff(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  const std::size_t body = n - n % 4;
  float64x2_t lo = vdupq_n_f64(0.0);
  float64x2_t hi = vdupq_n_f64(0.0);
  for (std::size_t i = 0; i < body; i += 4) {
    const float64x2_t d0 = vsubq_f64(vld1q_f64(a.data() + i), vld1q_f64(b.data() + i));
    const float64x2_t d1 =
        vsubq_f64(vld1q_f64(a.data() + i + 2), vld1q_f64(b.data() + i + 2));
    lo = vaddq_f64(lo, vmulq_f64(d0, d0));
    hi = vaddq_f64(hi, vmulq_f64(d1, d1));
  }
  double total = combine(lo, hi);
  for (std::size_t i = body; i < n; ++i) {
    const double d = a[i] - b[i];
    const double sq = d * d;
    total = total + sq;
  }
  return total;
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  const std::size_t n = x.size();
  const std::size_t body = n - n % 2;
  const float64x2_t va = vdupq_n_f64(alpha);
  for (std::size_t i = 0; i < body; i += 2) {
    const float64x2_t p = vmulq_f64(va, vld1q_f64(x.data() + i));
    vst1q_f64(y.data() + i, vaddq_f64(vld1q_f64(y.data() + i), p));
  }
  for (std::size_t i = body; i < n; ++i) {
    const double p = alpha * x[i];
    y[i] = y[i] + p;
  }
}

std::uint64_t concordant_pairs(std::span<const double> a,
                               std::span<const double> b) {
  const std::size_t n = a.size();
  const float64x2_t zero = vdupq_n_f64(0.0);
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const float64x2_t ai = vdupq_n_f64(a[i]);
    const float64x2_t bi = vdupq_n_f64(b[i]);
    std::size_t j = i + 1;
    for (; j + 2 <= n; j += 2) {
      const float64x2_t da = vsubq_f64(ai, vld1q_f64(a.data() + j));
      const float64x2_t db = vsubq_f64(bi, vld1q_f64(b.data() + j));
      const uint64x2_t both_pos = vandq_u64(vcgtq_f64(da, zero), vcgtq_f64(db, zero));
      const uint64x2_t both_neg = vandq_u64(vcltq_f64(da, zero), vcltq_f64(db, zero));
      const uint64x2_t hit = vshrq_n_u64(vorrq_u64(both_pos, both_neg), 63);
      count += vgetq_lane_u64(hit, 0) + vgetq_lane_u64(hit, 1);
    }
    for (; j < n; ++j) {
      const double da = a[i] - a[j];
      const double db = b[i] - b[j];
      if ((da > 0.0 && db > 0.0) || (da < 0.0 && db < 0.0)) ++count;
    }
  }
  return count;
}

}  // namespace readgrade::kernels::neon
