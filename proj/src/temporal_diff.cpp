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

#include "tempseg/temporal_diff.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tempseg/error.hpp"

namespace tempseg {

DifferenceSeries::DifferenceSeries(std::vector<double> values, std::size_t k,
                                   std::size_t valid_first,
                                   std::size_t valid_last)
    : values_(std::move(values)),
      k_(k),
      valid_first_(valid_first),
      valid_last_(valid_last) {
  require(!values_.empty(), "difference series must not be empty");
  if (has_valid_range())
    require(valid_last_ < values_.size(), "valid range exceeds series length");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double v = values_[i];
    require(std::isfinite(v) && v >= 0.0,
            "difference value at " + std::to_string(i) +
                " must be finite and non-negative");
    require(v == 0.0 || in_range(i),
            "difference value at " + std::to_string(i) +
                " lies outside the valid range but is non-zero");
  }
}

DifferenceSeries DifferenceSeries::with_window(std::vector<double> values,
                                               std::size_t k) {
  const std::size_t n = values.size();
  if (k == 0 || n < 2 * k) return DifferenceSeries(std::move(values), k, 1, 0);
  return DifferenceSeries(std::move(values), k, k, n - k);
}

double DifferenceSeries::max_value() const {
  if (!has_valid_range()) return 0.0;
  return *std::max_element(values_.begin() + valid_first_,
                           values_.begin() + valid_last_ + 1);
}

DifferenceSeries DifferenceSeries::scaled(double factor) const {
  require(std::isfinite(factor) && factor >= 0.0,
          "scale factor must be finite and non-negative");
  std::vector<double> v(values_);
  for (auto& x : v) x *= factor;
  return DifferenceSeries(std::move(v), k_, valid_first_, valid_last_);
}

DifferenceSeries compute_difference(const FeatureSequence& seq,
                                    std::size_t k) {
  require(k >= 1, "window length k must be at least 1");
  const std::size_t n = seq.num_frames();
  std::vector<double> values(n, 0.0);
  if (n < 2 * k) return DifferenceSeries(std::move(values), k, 1, 0);

  // Both windows step together, so eps[i] is a k-term sum of lag-k frame
  // distances: lag[t] = |f[t] - f[t+k]|^2, eps[i] = sum lag[i-k .. i-1].
  std::vector<double> lag(n - k);
  for (std::size_t t = 0; t + k < n; ++t) {
    const auto a = seq.frame(t);
    const auto b = seq.frame(t + k);
    double acc = 0.0;
    for (std::size_t d = 0; d < a.size(); ++d) {
      const double diff = static_cast<double>(a[d]) - static_cast<double>(b[d]);
      acc += diff * diff;
    }
    lag[t] = acc;
  }
  for (std::size_t i = k; i <= n - k; ++i) {
    double acc = 0.0;
    for (std::size_t t = i - k; t < i; ++t) acc += lag[t];
    values[i] = acc;
  }
  return DifferenceSeries(std::move(values), k, k, n - k);
}

}  // namespace tempseg
