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

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace readgrade::model {

// Dense column-major matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[c * rows_ + r]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[c * rows_ + r]; }
  std::span<double> column(std::size_t c) { return {data_.data() + c * rows_, rows_}; }
  std::span<const double> column(std::size_t c) const {
    return {data_.data() + c * rows_, rows_};
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

enum class RankPolicy { kThrow, kDrop };

struct LeastSquaresFit {
  std::vector<double> coefficients;  // one per column; dropped columns are 0
  std::vector<std::size_t> dropped;  // deficient columns, ascending
  std::vector<double> residuals;
  double rss = 0.0;
};

// Columns whose norm after orthogonalizing against the earlier kept columns
// is at most this fraction of their original norm count as deficient.
inline constexpr double kRankTolerance = 1e-10;

// Householder QR least squares, columns taken in order. Deficient columns
// either raise SingularDesign naming them (kThrow) or are dropped (kDrop).
// names labels the columns for error messages.
LeastSquaresFit solve_least_squares(const Matrix& x, std::span<const double> y,
                                    const std::vector<std::string>& names,
                                    RankPolicy policy = RankPolicy::kThrow);

}  // namespace readgrade::model
