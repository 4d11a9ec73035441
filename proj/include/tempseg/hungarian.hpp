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

#ifndef TEMPSEG_HUNGARIAN_HPP
#define TEMPSEG_HUNGARIAN_HPP

#include <cstddef>
#include <optional>
#include <vector>

namespace tempseg {

/// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  const std::vector<double>& data() const { return data_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

enum class Objective { Maximize, Minimize };

struct Assignment {
  /// Column assigned to each row; empty when the row landed on padding.
  std::vector<std::optional<std::size_t>> row_to_col;
  /// Sum of the matrix entries over assigned (row, col) pairs.
  double total = 0.0;
};

/// Kuhn-Munkres with row/column potentials, O(n^3). Rectangular inputs are
/// padded to square with zeros. Throws InvalidArgument on an empty matrix or
/// non-finite entries.
Assignment hungarian(const Matrix& values,
                     Objective objective = Objective::Maximize);

}  // namespace tempseg

#endif
