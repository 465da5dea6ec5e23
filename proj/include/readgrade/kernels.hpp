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

#pragma once

#include <cstdint>
#include <span>
#include <string_view>

// Numeric inner loops shared by the regression and evaluation code.
//
// Every kernel has a scalar reference implementation and optional SIMD
// variants (AVX2 on x86-64, NEON on AArch64). Reductions use four striped
// partial sums combined as (s0 + s1) + (s2 + s3), followed by the tail in
// order, so every backend produces bit-identical results. Backends are
// chosen once at startup from CPU features; READGRADE_SIMD=scalar forces the
// reference path.

namespace readgrade::kernels {

enum class Backend { kScalar, kAvx2, kNeon };

std::string_view backend_name(Backend backend);

// Backend currently used by the dispatching entry points below.
Backend active_backend();

// Overrides the dispatch choice. Returns false (and changes nothing) if the
// backend is not available on this machine.
bool set_backend(Backend backend);

bool backend_available(Backend backend);

// Dispatching entry points.
double dot(std::span<const double> a, std::span<const double> b);
double sum(std::span<const double> a);
double sum_squared_diff(std::span<const double> a, std::span<const double> b);
// y += alpha * x
void axpy(double alpha, std::span<const double> x, std::span<double> y);
// Number of unordered pairs i < j with (a[i] - a[j]) * (b[i] - b[j]) > 0.
std::uint64_t concordant_pairs(std::span<const double> a,
                               std::span<const double> b);

namespace scalar {
double dot(std::span<const double> a, std::span<const double> b);
double sum(std::span<const double> a);
double sum_squared_diff(std::span<const double> a, std::span<const double> b);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
std::uint64_t concordant_pairs(std::span<const double> a,
                               std::span<const double> b);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
namespace avx2 {
double dot(std::span<const double> a, std::span<const double> b);
double sum(std::span<const double> a);
double sum_squared_diff(std::span<const double> a, std::span<const double> b);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
std::uint64_t concordant_pairs(std::span<const double> a,
                               std::span<const double> b);
}  // namespace avx2
#endif

#if defined(__aarch64__)
namespace neon {
double dot(std::span<const double> a, std::span<const double> b);
double sum(std::span<const double> a);
double sum_squared_diff(std::span<const double> a, std::span<const double> b);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
std::uint64_t concordant_pairs(std::span<const double> a,
                               std::span<const double> b);
}  // namespace neon
#endif

}  // namespace readgrade::kernels
