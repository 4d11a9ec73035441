// Copyright 2026 The tempseg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tempseg/hungarian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tempseg/error.hpp"

namespace tempseg {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  require(data_.size() == rows_ * cols_, "matrix data size mismatch");
}

Assignment hungarian(const Matrix& values, Objective objective) {
  require(values.rows() > 0 && values.cols() > 0,
          "assignment matrix must not be empty");
  for (double v : values.data())
    require(std::isfinite(v), "assignment matrix entries must be finite");

  const std::size_t n = std::max(values.rows(), values.cols());
  const double sign = objective == Objective::Maximize ? -1.0 : 1.0;
  const auto cost = [&](std::size_t r, std::size_t c) {
    if (r >= values.rows() || c >= values.cols()) return 0.0;
    return sign * values(r, c);
  };

  // 1-based shortest augmenting path formulation; index 0 is a sentinel.
  constexpr double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> match_col(n + 1, 0), way(n + 1, 0);
  for (std::size_t row = 1; row <= n; ++row) {
    match_col[0] = row;
    std::size_t col0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[col0] = true;
      const std::size_t r0 = match_col[col0];
      double delta = inf;
      std::size_t col1 = 0;
      for (std::size_t c = 1; c <= n; ++c) {
        if (used[c]) continue;
        const double cur = cost(r0 - 1, c - 1) - u[r0] - v[c];
        if (cur < minv[c]) {
          minv[c] = cur;
          way[c] = col0;
        }
        if (minv[c] < delta) {
          delta = minv[c];
          col1 = c;
        }
      }
      for (std::size_t c = 0; c <= n; ++c) {
        if (used[c]) {
          u[match_col[c]] += delta;
          v[c] -= delta;
        } else {
          minv[c] -= delta;
        }
      }
      col0 = col1;
    } while (match_col[col0] != 0);
    do {
      const std::size_t col1 = way[col0];
      match_col[col0] = match_col[col1];
      col0 = col1;
    } while (col0 != 0);
  }

  Assignment out;
  out.row_to_col.assign(values.rows(), std::nullopt);
  for (std::size_t c = 1; c <= n; ++c) {
    const std::size_t r = match_col[c] - 1;
    if (r < values.rows() && c - 1 < values.cols()) {
      out.row_to_col[r] = c - 1;
      out.total += values(r, c - 1);
    }
  }
  return out;
}

}  // namespace tempseg
