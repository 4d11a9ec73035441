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

#ifndef TEMPSEG_TEMPORAL_DIFF_HPP
#define TEMPSEG_TEMPORAL_DIFF_HPP

#include <cstddef>
#include <vector>

#include "tempseg/feature_store.hpp"

namespace tempseg {

/// Per-frame temporal feature difference. Only indices in
/// [valid_first, valid_last] carry a value; everything else is 0 and is never
/// a boundary candidate. An empty valid range is encoded as
/// valid_first > valid_last.
class DifferenceSeries {
 public:
  DifferenceSeries(std::vector<double> values, std::size_t k,
                   std::size_t valid_first, std::size_t valid_last);

  /// Series with the range an ε computed with window k over values.size()
  /// frames would have: [k, L - k].
  static DifferenceSeries with_window(std::vector<double> values,
                                      std::size_t k);

  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t i) const { return values_[i]; }
  std::size_t size() const { return values_.size(); }
  std::size_t k() const { return k_; }
  std::size_t valid_first() const { return valid_first_; }
  std::size_t valid_last() const { return valid_last_; }
  bool has_valid_range() const { return valid_first_ <= valid_last_; }
  bool in_range(std::size_t i) const {
    return i >= valid_first_ && i <= valid_last_;
  }
  /// Largest value over the valid range; 0 if the range is empty.
  double max_value() const;

  DifferenceSeries scaled(double factor) const;

 private:
  std::vector<double> values_;
  std::size_t k_;
  std::size_t valid_first_;
  std::size_t valid_last_;
};

/// eps[i] = sum_{j<k} |f[i-k+j] - f[i+j]|^2 for i in [k, L-k], else 0.
///
/// Accumulates in double. Throws InvalidArgument when k < 1.
DifferenceSeries compute_difference(const FeatureSequence& seq, std::size_t k);

}  // namespace tempseg

#endif
