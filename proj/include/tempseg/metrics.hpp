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

#ifndef TEMPSEG_METRICS_HPP
#define TEMPSEG_METRICS_HPP

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tempseg/feature_store.hpp"

namespace tempseg {

enum class ThresholdMode {
  Small,  // fixed 2 s
  Large,  // 5% of the video length
};

enum class MatchMode {
  Strict,  // maximum one-to-one matching
  Paper,   // each GT boundary takes its nearest prediction
};

std::string_view threshold_mode_name(ThresholdMode m);
std::string_view match_mode_name(MatchMode m);

/// small: round(2 * fps) frames; large: round(0.05 * L) frames.
std::size_t f1_threshold(std::size_t num_frames, FrameRate fps,
                         ThresholdMode mode);

struct F1Report {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  /// GT boundaries counted as detected (P).
  std::size_t matched = 0;
  /// Distinct predictions used by those matches; equals matched in strict mode.
  std::size_t matched_pred = 0;
  std::size_t num_pred = 0;
  std::size_t num_gt = 0;
  std::size_t threshold_frames = 0;
  MatchMode mode = MatchMode::Strict;
};

/// precision = matched_pred / N, recall = matched / M, F1 their harmonic
/// mean; empty denominators score 0 except M = N = 0, which scores 1.
F1Report boundary_f1(const BoundarySet& pred, const BoundarySet& gt,
                     std::size_t threshold_frames,
                     MatchMode mode = MatchMode::Strict);

struct MofReport {
  double mof = 0.0;
  std::size_t correct_frames = 0;
  std::size_t total_frames = 0;
  /// Predicted label -> ground-truth label.
  std::map<std::string, std::string> assignment;
};

/// Mean over frames after a Hungarian one-to-one matching of predicted labels
/// to GT labels that maximises frame overlap.
MofReport mof(const Segmentation& pred, const Segmentation& gt);

struct VideoReport {
  F1Report small;
  F1Report large;
  MofReport mof;
};

/// Predicted segments get synthetic ids before the MoF matching.
VideoReport evaluate_video(const BoundarySet& pred, const Segmentation& gt,
                           FrameRate fps, MatchMode mode = MatchMode::Strict);

/// Unweighted per-video means.
struct DatasetSummary {
  std::size_t videos = 0;
  double precision_small = 0.0, recall_small = 0.0, f1_small = 0.0;
  double precision_large = 0.0, recall_large = 0.0, f1_large = 0.0;
  double mof = 0.0;
};

DatasetSummary summarize(std::span<const VideoReport> reports);

}  // namespace tempseg

#endif
