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

#ifndef TEMPSEG_BOUNDARY_SELECT_HPP
#define TEMPSEG_BOUNDARY_SELECT_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tempseg/candidate_detect.hpp"
#include "tempseg/feature_store.hpp"
#include "tempseg/temporal_diff.hpp"

namespace tempseg {

/// The three feature streams that vote on boundaries. Global candidates
/// anchor clusters.
enum class Stream { Global = 0, Interact = 1, Relation = 2 };

std::string_view stream_name(Stream s);
std::optional<Stream> parse_stream(std::string_view name);

enum class Normalize { None, Max };

struct FusionConfig {
  double beta_global = 1.0;
  double beta_interact = 1.0;
  double beta_relation = 0.3;
  /// Neighbourhood radius in frames (2 s at 5 fps).
  std::size_t theta_n = 10;
  Normalize normalize = Normalize::Max;
  double salience_factor = 2.0;

  double beta(Stream s) const;
  void validate() const;
};

enum class Acceptance { Cluster, Salience, SingleStream, Fallback };

std::string_view acceptance_name(Acceptance a);

struct ClusterMember {
  Stream stream;
  std::size_t frame;
  double score;  // the candidate's difference value in its own stream

  friend bool operator==(const ClusterMember&, const ClusterMember&) = default;
};

struct BoundaryProvenance {
  std::size_t source_frame;
  std::vector<ClusterMember> cluster_members;
  Acceptance accepted_by;
  double confidence;

  friend bool operator==(const BoundaryProvenance&,
                         const BoundaryProvenance&) = default;
};

struct FusionResult {
  BoundarySet boundaries;
  /// One record per boundary, in boundary order.
  std::vector<BoundaryProvenance> provenance;

  friend bool operator==(const FusionResult&, const FusionResult&) = default;
};

/// S[i] = sum over streams of beta * norm(eps)[i]. With Normalize::Max each
/// series is divided by its maximum over the valid range first (an all-zero
/// series stays zero).
std::vector<double> confidence_scores(
    const std::map<Stream, DifferenceSeries>& series_by_stream,
    const FusionConfig& cfg);

/// Confidence-weighted voting over per-stream candidates.
///
/// Stage 1 walks the anchor stream (global, or the first configured stream
/// when global is absent) in frame order. An anchor candidate forms a cluster
/// when every other stream has an unconsumed candidate within theta_n; the
/// nearest one from each stream joins (ties to the earlier frame) and is
/// consumed. The member with the largest S is the cluster's boundary.
///
/// Stage 2 accepts any unconsumed candidate whose S exceeds salience_factor
/// times the largest Stage-1 S. If Stage 1 found no cluster, the single
/// candidate with the largest S stands in for it.
///
/// Stage 3 applies non-maximum suppression in decreasing S: a boundary within
/// theta_n of an already kept, higher-scoring one is dropped.
///
/// With exactly one stream configured its candidates are returned unchanged.
FusionResult select_boundaries(
    const std::map<Stream, CandidateSet>& candidates_by_stream,
    std::span<const double> scores, const FusionConfig& cfg);

struct PipelineConfig {
  std::size_t k = 5;
  std::size_t alpha = 15;
  FusionConfig fusion;
};

/// Difference -> candidates -> fusion for up to three streams of equal length.
FusionResult detect_boundaries(
    const std::map<Stream, FeatureSequence>& streams,
    const PipelineConfig& cfg);

/// Equal Split baseline: boundaries at round(m * L / M), m = 1 .. M-1.
BoundarySet equal_split(std::size_t num_frames, std::size_t num_segments);

/// Provenance as JSON (boundaries plus one record per boundary).
std::string fusion_result_to_json(const FusionResult& result);

}  // namespace tempseg

#endif
