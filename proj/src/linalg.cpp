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

#include "readgrade/linalg.hpp"

#include <cmath>

#include "readgrade/errors.hpp"
#include "readgrade/kernels.hpp"

namespace readgrade::model {

LeastSquaresFit solve_least_squares(const Matrix& x, std::span<const double> y,
                                    const std::vector<std::string>& names, RankPolicy policy) {
  const std::size_t n = x.rows();
  const std::size_t p = x.cols();
  if (y.size() != n) throw ConfigError("response length does not match the design");

  Matrix a = x;
  std::vector<double> qty(y.begin(), y.end());
  std::vector<std::size_t> kept;
  std::vector<double> diag;
  std::vector<double> v;
  LeastSquaresFit fit;

  for (std::size_t j = 0; j < p; ++j) {
    const double original = std::sqrt(kernels::dot(x.column(j), x.column(j)));
    const std::size_t k = kept.size();
    auto col = a.column(j).subspan(k);
    const double norm = k < n ? std::sqrt(kernels::dot(col, col)) : 0.0;
    if (k >= n || original == 0.0 || norm <= kRankTolerance * original) {
      fit.dropped.push_back(j);
      continue;
    }
    const double alpha = col[0] > 0.0 ? -norm : norm;
    v.assign(col.begin(), col.end());
    v[0] -= alpha;
    const double vnorm2 = kernels::dot(v, v);
    if (vnorm2 > 0.0) {
      for (std::size_t c = j; c < p; ++c) {
        auto target = a.column(c).subspan(k);
        kernels::axpy(-2.0 * kernels::dot(v, target) / vnorm2, v, target);
      }
      std::span<double> rest(qty.data() + k, n - k);
      kernels::axpy(-2.0 * kernels::dot(v, rest) / vnorm2, v, rest);
    }
    kept.push_back(j);
    diag.push_back(alpha);
  }

  if (!fit.dropped.empty() && policy == RankPolicy::kThrow) {
    std::vector<std::string> bad;
    for (std::size_t j : fit.dropped) bad.push_back(j < names.size() ? names[j] : std::to_string(j));
    throw SingularDesign(std::move(bad));
  }

  // Back substitution over the kept columns; R(i, kept[m]) sits in a(i, kept[m]).
  fit.coefficients.assign(p, 0.0);
  const std::size_t r = kept.size();
  std::vector<double> beta(r, 0.0);
  for (std::size_t i = r; i-- > 0;) {
    double acc = qty[i];
    for (std::size_t m = i + 1; m < r; ++m) acc -= a(i, kept[m]) * beta[m];
    beta[i] = acc / diag[i];
  }
  for (std::size_t i = 0; i < r; ++i) fit.coefficients[kept[i]] = beta[i];

  fit.residuals.assign(y.begin(), y.end());
  for (std::size_t j = 0; j < p; ++j) {
    if (fit.coefficients[j] != 0.0) kernels::axpy(-fit.coefficients[j], x.column(j), fit.residuals);
  }
  fit.rss = kernels::dot(fit.residuals, fit.residuals);
  return fit;
}

}  // namespace readgrade::model
