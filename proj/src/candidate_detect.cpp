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

#include "tempseg/candidate_detect.hpp"

#include <algorithm>
#include <deque>

#include "tempseg/error.hpp"

namespace tempseg {

std::vector<std::size_t> CandidateSet::frames() const {
  std::vector<std::size_t> out;
  out.reserve(entries.size());
  for (const auto& c : entries) out.push_back(c.frame);
  return out;
}

CandidateSet detect_candidates(const DifferenceSeries& series,
                               std::size_t alpha, std::string stream_id) {
  require(alpha >= 1, "candidate interval alpha must be at least 1");
  CandidateSet out;
  out.alpha = alpha;
  out.stream_id = std::move(stream_id);
  if (!series.has_valid_range()) return out;

  const auto& v = series.values();
  const std::size_t lo = series.valid_first();
  const std::size_t hi = series.valid_last();

  // Sliding-window maximum over [i - alpha, i + alpha] with a monotone deque.
  // Ties keep the earliest index at the front, so "i is the window max and
  // nothing earlier ties it" is exactly "front() == i".
  std::deque<std::size_t> window;
  std::size_t pushed = lo;
  for (std::size_t i = lo; i <= hi; ++i) {
    const std::size_t right = std::min(hi, i + alpha);
    for (; pushed <= right; ++pushed) {
      while (!window.empty() && v[window.back()] < v[pushed])
        window.pop_back();
      window.push_back(pushed);
    }
    const std::size_t left = i >= lo + alpha ? i - alpha : lo;
    while (window.front() < left) window.pop_front();
    if (window.front() == i && v[i] > 0.0)
      out.entries.push_back({i, v[i]});
  }
  return out;
}

}  // namespace tempseg
