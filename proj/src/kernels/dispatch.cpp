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

#include <atomic>
#include <cassert>
#include <cstdlib>
#include <string>

#include "readgrade/kernels.hpp"

namespace readgrade::kernels {
namespace {

struct Table {
  double (*dot)(std::span<const double>, std::span<const double>);
  double (*sum)(std::span<const double>);
  double (*sum_squared_diff)(std::span<const double>, std::span<const double>);
  void (*axpy)(double, std::span<const double>, std::span<double>);
  std::uint64_t (*concordant_pairs)(std::span<const double>, std::span<const double>);
};

constexpr Table kScalarTable = {scalar::dot, scalar::sum, scalar::sum_squared_diff,
                                scalar::axpy, scalar::concordant_pairs};
#if defined(__x86_64__) || defined(_M_X64)
constexpr Table kAvx2Table = {avx2::dot, avx2::sum, avx2::sum_squared_diff,
                              avx2::axpy, avx2::concordant_pairs};
#endif
#if defined(__aarch64__)
constexpr Table kNeonTable = {neon::dot, neon::sum, neon::sum_squared_diff,
                              neon::axpy, neon::concordant_pairs};
#endif

const Table* table_for(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return &kScalarTable;
    case Backend::kAvx2:
#if defined(__x86_64__) || defined(_M_X64)
      return &kAvx2Table;
#else
      return nullptr;
#endif
    case Backend::kNeon:
#if defined(__aarch64__)
      return &kNeonTable;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

Backend detect() {
  if (const char* forced = std::getenv("READGRADE_SIMD")) {
    if (std::string(forced) == "scalar") return Backend::kScalar;
  }
#if defined(__x86_64__) || defined(_M_X64)
  __builtin_cpu_init();
  if (__builtin_cpu_supports("avx2")) return Backend::kAvx2;
#elif defined(__aarch64__)
  return Backend::kNeon;
#endif
  return Backend::kScalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

const Table& active() { return *table_for(current().load(std::memory_order_relaxed)); }

}  // namespace

std::string_view backend_name(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
    case Backend::kNeon:
      return "neon";
  }
  return "unknown";
}

bool backend_available(Backend backend) {
  if (table_for(backend) == nullptr) return false;
#if defined(__x86_64__) || defined(_M_X64)
  if (backend == Backend::kAvx2) {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
  }
#endif
  return true;
}

Backend active_backend() { return current().load(); }

bool set_backend(Backend backend) {
  if (!backend_available(backend)) return false;
  current().store(backend);
  return true;
}

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return active().dot(a, b);
}

double sum(std::span<const double> a) { return active().sum(a); }

double sum_squared_diff(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return active().sum_squared_diff(a, b);
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  active().axpy(alpha, x, y);
}

std::uint64_t concordant_pairs(std::span<const double> a,
                               std::span<const double> b) {
  assert(a.size() == b.size());
  return active().concordant_pairs(a, b);
}

}  // namespace readgrade::kernels
