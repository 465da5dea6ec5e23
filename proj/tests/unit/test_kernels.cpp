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


#include <cstring>
#include <vector>

#include "doctest.h"
#include "readgrade/kernels.hpp"
#include "readgrade/rng.hpp"

using namespace readgrade;
namespace k = readgrade::kernels;

namespace {

std::vector<double> random_vector(Rng& rng, std::size_t n, bool ties) {
  std::vector<double> v(n);
  for (auto& x : v) x = ties ? static_cast<double>(rng.below(4)) : rng.normal(0.0, 1e3);
  return v;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

struct Variant {
  const char* name;
  double (*dot)(std::span<const double>, std::span<const double>);
  double (*sum)(std::span<const double>);
  double (*ssd)(std::span<const double>, std::span<const double>);
  void (*axpy)(double, std::span<const double>, std::span<double>);
  std::uint64_t (*concordant)(std::span<const double>, std::span<const double>);
};

std::vector<Variant> accelerated() {
  std::vector<Variant> out;
#if defined(__x86_64__) || defined(_M_X64)
  if (k::backend_available(k::Backend::kAvx2)) {
    out.push_back({"avx2", k::avx2::dot, k::avx2::sum, k::avx2::sum_squared_diff, k::avx2::axpy,
                   k::avx2::concordant_pairs});
  }
#endif
#if defined(__aarch64__)
  out.push_back({"neon", k::neon::dot, k::neon::sum, k::neon::sum_squared_diff, k::neon::axpy,
                 k::neon::concordant_pairs});
#endif
  return out;
}

}  // namespace

TEST_CASE("scalar kernels against direct loops") {
  const std::vector<double> a = {1, 2, 3, 4, 5};
  const std::vector<double> b = {5, 4, 3, 2, 1};
  CHECK(k::scalar::dot(a, b) == 35.0);
  CHECK(k::scalar::sum(a) == 15.0);
  CHECK(k::scalar::sum_squared_diff(a, b) == 40.0);
  std::vector<double> y = b;
  k::scalar::axpy(2.0, a, y);
  CHECK(y == std::vector<double>{7, 8, 9, 10, 11});
  CHECK(k::scalar::concordant_pairs(a, a) == 10);
  CHECK(k::scalar::concordant_pairs(a, b) == 0);
  CHECK(k::scalar::sum(std::span<const double>{}) == 0.0);
}

TEST_CASE("accelerated kernels are bit-identical to scalar") {
  Rng rng(3);
  for (const auto& v : accelerated()) {
    CAPTURE(v.name);
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 9u, 16u, 31u, 33u, 100u, 1001u}) {
      for (bool ties : {false, true}) {
        const auto a = random_vector(rng, n, ties);
        const auto b = random_vector(rng, n, ties);
        CHECK(same_bits(v.dot(a, b), k::scalar::dot(a, b)));
        CHECK(same_bits(v.sum(a), k::scalar::sum(a)));
        CHECK(same_bits(v.ssd(a, b), k::scalar::sum_squared_diff(a, b)));
        auto y1 = b;
        auto y2 = b;
        v.axpy(-0.37, a, y1);
        k::scalar::axpy(-0.37, a, y2);
        CHECK(std::memcmp(y1.data(), y2.data(), n * sizeof(double)) == 0);
        CHECK(v.concordant(a, b) == k::scalar::concordant_pairs(a, b));
      }
    }
  }
}

TEST_CASE("dispatch can be forced to scalar") {
  const auto before = k::active_backend();
  CHECK(k::set_backend(k::Backend::kScalar));
  CHECK(k::active_backend() == k::Backend::kScalar);
  CHECK(k::backend_name(k::Backend::kScalar) == "scalar");
  const std::vector<double> a = {1.5, 2.5};
  CHECK(k::dot(a, a) == 8.5);
  k::set_backend(before);
  CHECK(k::backend_available(k::Backend::kScalar));
}
