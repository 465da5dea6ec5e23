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

#include "readgrade/stats.hpp"

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "readgrade/errors.hpp"
#include "readgrade/kernels.hpp"

namespace readgrade::model {
namespace {

void check_lengths(std::span<const double> a, std::span<const double> b, std::size_t min) {
  if (a.size() != b.size()) throw ConfigError("metric inputs differ in length");
  if (a.size() < min) {
    throw ConfigError("metric needs at least " + std::to_string(min) + " values");
  }
}

double beta_continued_fraction(double a, double b, double x) {
  constexpr double kTiny = 1e-300;
  constexpr double kEps = 1e-16;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 10000; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) return h;
  }
  return h;
}

}  // namespace

double mean(std::span<const double> a) {
  if (a.empty()) throw ConfigError("mean of an empty sequence");
  return kernels::sum(a) / static_cast<double>(a.size());
}

double rmse(std::span<const double> gold, std::span<const double> pred) {
  check_lengths(gold, pred, 1);
  return std::sqrt(kernels::sum_squared_diff(gold, pred) / static_cast<double>(gold.size()));
}

double pearson(std::span<const double> a, std::span<const double> b) {
  check_lengths(a, b, 2);
  const double ma = mean(a);
  const double mb = mean(b);
  std::vector<double> ca(a.begin(), a.end());
  std::vector<double> cb(b.begin(), b.end());
  for (auto& v : ca) v -= ma;
  for (auto& v : cb) v -= mb;
  const double saa = kernels::dot(ca, ca);
  const double sbb = kernels::dot(cb, cb);
  if (saa == 0.0 || sbb == 0.0) throw UndefinedCorrelation("correlation undefined: zero variance");
  const double r = kernels::dot(ca, cb) / std::sqrt(saa * sbb);
  return std::fmax(-1.0, std::fmin(1.0, r));
}

double total_sum_squares(std::span<const double> y) {
  const double m = mean(y);
  std::vector<double> centered(y.begin(), y.end());
  for (auto& v : centered) v -= m;
  return kernels::dot(centered, centered);
}

double r_squared(double rss, double tss) { return tss == 0.0 ? 0.0 : 1.0 - rss / tss; }

double incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0)) throw DomainError("incomplete beta needs a, b > 0");
  if (!(x >= 0.0 && x <= 1.0)) throw DomainError("incomplete beta needs 0 <= x <= 1");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double log_front = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b) +
                           a * std::log(x) + b * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) return front * beta_continued_fraction(a, b, x) / a;
  return 1.0 - front * beta_continued_fraction(b, a, 1.0 - x) / b;
}

double f_survival(double f, double d1, double d2) {
  if (!(d1 > 0.0) || !(d2 > 0.0)) throw DomainError("F distribution needs positive degrees of freedom");
  if (std::isnan(f)) throw DomainError("F statistic is NaN");
  if (f <= 0.0) return 1.0;
  if (std::isinf(f)) return 0.0;
  return incomplete_beta(d2 / 2.0, d1 / 2.0, d2 / (d2 + d1 * f));
}

}  // namespace readgrade::model
