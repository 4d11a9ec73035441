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

#include "tempseg/metrics.hpp"

#include <algorithm>
#include <set>

#include "tempseg/error.hpp"
#include "tempseg/hungarian.hpp"

namespace tempseg {

namespace {

std::size_t distance(std::size_t a, std::size_t b) {
  return a > b ? a - b : b - a;
}

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

void fill_scores(F1Report& r) {
  if (r.num_pred == 0 && r.num_gt == 0) {
    r.precision = r.recall = r.f1 = 1.0;
    return;
  }
  r.precision = ratio(r.matched_pred, r.num_pred);
  r.recall = ratio(r.matched, r.num_gt);
  const double sum = r.precision + r.recall;
  r.f1 = sum > 0.0 ? 2.0 * r.precision * r.recall / sum : 0.0;
}

// Both lists sorted. Every GT boundary's admissible predictions form a window
// that slides right as the GT advances, so giving each GT the leftmost free
// admissible prediction is a maximum matching.
std::size_t max_matching(const std::vector<std::size_t>& pred,
                         const std::vector<std::size_t>& gt,
                         std::size_t threshold) {
  std::size_t matched = 0;
  std::size_t j = 0;
  for (std::size_t g : gt) {
    while (j < pred.size() && pred[j] + threshold < g) ++j;
    if (j < pred.size() && pred[j] <= g + threshold) {
      ++matched;
      ++j;
    }
  }
  return matched;
}

}  // namespace

std::string_view threshold_mode_name(ThresholdMode m) {
  return m == ThresholdMode::Small ? "small" : "large";
}

std::string_view match_mode_name(MatchMode m) {
  return m == MatchMode::Strict ? "strict" : "paper";
}

std::size_t f1_threshold(std::size_t num_frames, FrameRate fps,
                         ThresholdMode mode) {
  require(num_frames >= 1, "threshold needs num_frames >= 1");
  require(fps.num > 0 && fps.den > 0, "fps must be positive");
  if (mode == ThresholdMode::Small) {
    // round(2 * num / den) with halves rounded up
    const std::uint64_t num = fps.num, den = fps.den;
    return static_cast<std::size_t>((4 * num + den) / (2 * den));
  }
  // round(L / 20)
  return (num_frames + 10) / 20;
}

F1Report boundary_f1(const BoundarySet& pred, const BoundarySet& gt,
                     std::size_t threshold_frames, MatchMode mode) {
  if (pred.num_frames() != gt.num_frames())
    fail(ErrorCode::InvalidArgument,
         "prediction covers " + std::to_string(pred.num_frames()) +
             " frames but ground truth covers " +
             std::to_string(gt.num_frames()));
  F1Report r;
  r.num_pred = pred.size();
  r.num_gt = gt.size();
  r.threshold_frames = threshold_frames;
  r.mode = mode;

  const auto& p = pred.frames();
  if (mode == MatchMode::Strict) {
    r.matched = r.matched_pred = max_matching(p, gt.frames(), threshold_frames);
  } else if (!p.empty()) {
    std::set<std::size_t> used;
    for (std::size_t g : gt.frames()) {
      auto it = std::lower_bound(p.begin(), p.end(), g);
      std::size_t best;
      if (it == p.end()) {
        best = p.size() - 1;
      } else if (it == p.begin()) {
        best = 0;
      } else {
        const auto hi = static_cast<std::size_t>(it - p.begin());
        // Equidistant neighbours resolve to the earlier prediction.
        best = distance(p[hi - 1], g) <= distance(p[hi], g) ? hi - 1 : hi;
      }
      if (distance(p[best], g) <= threshold_frames) {
        ++r.matched;
        used.insert(best);
      }
    }
    r.matched_pred = used.size();
  }
  fill_scores(r);
  return r;
}

MofReport mof(const Segmentation& pred, const Segmentation& gt) {
  if (pred.size() != gt.size())
    fail(ErrorCode::InvalidArgument,
         "prediction has " + std::to_string(pred.size()) +
             " frames but ground truth has " + std::to_string(gt.size()));

  const auto index_labels = [](const Segmentation& seg,
                               std::vector<std::string>& names) {
    std::map<std::string, std::size_t> ids;
    std::vector<std::size_t> out;
    out.reserve(seg.size());
    for (const auto& l : seg.labels()) {
      auto [it, inserted] = ids.try_emplace(l, names.size());
      if (inserted) names.push_back(l);
      out.push_back(it->second);
    }
    return out;
  };
  std::vector<std::string> pred_names, gt_names;
  const auto pred_ids = index_labels(pred, pred_names);
  const auto gt_ids = index_labels(gt, gt_names);

  Matrix overlap(pred_names.size(), gt_names.size());
  for (std::size_t i = 0; i < pred.size(); ++i)
    overlap(pred_ids[i], gt_ids[i]) += 1.0;

  const Assignment a = hungarian(overlap, Objective::Maximize);
  MofReport r;
  r.total_frames = pred.size();
  for (std::size_t row = 0; row < a.row_to_col.size(); ++row) {
    if (!a.row_to_col[row]) continue;
    const std::size_t col = *a.row_to_col[row];
    r.assignment[pred_names[row]] = gt_names[col];
    r.correct_frames += static_cast<std::size_t>(overlap(row, col));
  }
  r.mof = ratio(r.correct_frames, r.total_frames);
  return r;
}

VideoReport evaluate_video(const BoundarySet& pred, const Segmentation& gt,
                           FrameRate fps, MatchMode mode) {
  const BoundarySet gt_bounds = segmentation_to_boundaries(gt);
  const std::size_t n = gt.size();
  VideoReport out;
  out.small = boundary_f1(pred, gt_bounds,
                          f1_threshold(n, fps, ThresholdMode::Small), mode);
  out.large = boundary_f1(pred, gt_bounds,
                          f1_threshold(n, fps, ThresholdMode::Large), mode);
  out.mof = mof(boundaries_to_segmentation(pred), gt);
  return out;
}

DatasetSummary summarize(std::span<const VideoReport> reports) {
  DatasetSummary s;
  s.videos = reports.size();
  if (reports.empty()) return s;
  for (const auto& r : reports) {
    s.precision_small += r.small.precision;
    s.recall_small += r.small.recall;
    s.f1_small += r.small.f1;
    s.precision_large += r.large.precision;
    s.recall_large += r.large.recall;
    s.f1_large += r.large.f1;
    s.mof += r.mof.mof;
  }
  const double n = static_cast<double>(reports.size());
  for (double* v : {&s.precision_small, &s.recall_small, &s.f1_small,
                    &s.precision_large, &s.recall_large, &s.f1_large, &s.mof})
    *v /= n;
  return s;
}

}  // namespace tempseg
