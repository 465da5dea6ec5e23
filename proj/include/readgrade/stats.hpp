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

#include <span>

namespace readgrade::model {

double mean(std::span<const double> a);

// Root mean squared error. Lengths must match and be >= 1.
double rmse(std::span<const double> gold, std::span<const double> pred);

// Throws UndefinedCorrelation when either side has zero variance.
double pearson(std::span<const double> a, std::span<const double> b);

// Sum of squared deviations from the mean.
double total_sum_squares(std::span<const double> y);

// 1 - rss / tss; 0 when tss is 0.
double r_squared(double rss, double tss);

// Regularized incomplete beta I_x(a, b), continued fraction evaluated with
// the modified Lentz method.
double incomplete_beta(double a, double b, double x);

// P(F > f) for F ~ F(d1, d2).
double f_survival(double f, double d1, double d2);

}  // namespace readgrade::model
