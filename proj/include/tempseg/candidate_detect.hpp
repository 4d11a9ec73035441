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

#ifndef TEMPSEG_CANDIDATE_DETECT_HPP
#define TEMPSEG_CANDIDATE_DETECT_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "tempseg/temporal_diff.hpp"

namespace tempseg {

struct Candidate {
  std::size_t frame;
  double score;

  friend bool operator==(const Candidate&, const Candidate&) = default;
};

/// Local maxima of one stream's difference series, sorted by frame.
struct CandidateSet {
  std::vector<Candidate> entries;
  std::size_t alpha = 0;
  std::string stream_id;

  std::size_t size() const { return entries.size(); }
  std::vector<std::size_t> frames() const;
};

/// Frame i is a candidate iff it lies in the valid range, eps[i] > 0, eps[i]
/// is >= every value in [i - alpha, i + alpha] clipped to the valid range, and
/// no earlier frame in that window ties it (plateaus resolve to their first
/// frame).
///
/// Throws InvalidArgument when alpha < 1.
CandidateSet detect_candidates(const DifferenceSeries& series,
                               std::size_t alpha,
                               std::string stream_id = {});

}  // namespace tempseg

#endif
