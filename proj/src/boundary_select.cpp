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

#include "tempseg/boundary_select.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <json.hpp>
#include <set>
#include <utility>

#include "tempseg/error.hpp"

namespace tempseg {

namespace {

constexpr Stream kStreams[] = {Stream::Global, Stream::Interact,
                               Stream::Relation};

std::size_t distance(std::size_t a, std::size_t b) {
  return a > b ? a - b : b - a;
}

struct Accepted {
  BoundaryProvenance record;
  std::size_t order;  // acceptance order, last tie-break for determinism
};

}  // namespace

std::string_view stream_name(Stream s) {
  switch (s) {
    case Stream::Global:
      return "global";
    case Stream::Interact:
      return "interact";
    case Stream::Relation:
      return "relation";
  }
  return "unknown";
}

std::optional<Stream> parse_stream(std::string_view name) {
  for (Stream s : kStreams)
    if (stream_name(s) == name) return s;
  return std::nullopt;
}

std::string_view acceptance_name(Acceptance a) {
  switch (a) {
    case Acceptance::Cluster:
      return "cluster";
    case Acceptance::Salience:
      return "salience";
    case Acceptance::SingleStream:
      return "single_stream";
    case Acceptance::Fallback:
      return "fallback";
  }
  return "unknown";
}

double FusionConfig::beta(Stream s) const {
  switch (s) {
    case Stream::Global:
      return beta_global;
    case Stream::Interact:
      return beta_interact;
    case Stream::Relation:
      return beta_relation;
  }
  return 0.0;
}

void FusionConfig::validate() const {
  for (Stream s : kStreams)
    require(std::isfinite(beta(s)) && beta(s) >= 0.0,
            "beta weights must be finite and non-negative");
  require(beta_global > 0.0 || beta_interact > 0.0 || beta_relation > 0.0,
          "at least one beta weight must be positive");
  require(std::isfinite(salience_factor) && salience_factor > 1.0,
          "salience factor must exceed 1");
}

std::vector<double> confidence_scores(
    const std::map<Stream, DifferenceSeries>& series_by_stream,
    const FusionConfig& cfg) {
  cfg.validate();
  require(!series_by_stream.empty(), "no difference series given");
  const std::size_t n = series_by_stream.begin()->second.size();
  std::vector<double> scores(n, 0.0);
  for (const auto& [stream, series] : series_by_stream) {
    require(series.size() == n,
            "difference series lengths differ across streams");
    double scale = cfg.beta(stream);
    if (cfg.normalize == Normalize::Max) {
      const double peak = series.max_value();
      scale = peak > 0.0 ? scale / peak : 0.0;
    }
    for (std::size_t i = 0; i < n; ++i) scores[i] += scale * series[i];
  }
  return scores;
}

FusionResult select_boundaries(
    const std::map<Stream, CandidateSet>& candidates_by_stream,
    std::span<const double> scores, const FusionConfig& cfg) {
  cfg.validate();
  require(!candidates_by_stream.empty(), "no candidate streams given");
  const std::size_t n = scores.size();
  require(n >= 1, "confidence scores must cover at least one frame");
  for (const auto& [stream, cands] : candidates_by_stream) {
    for (std::size_t i = 0; i < cands.entries.size(); ++i) {
      const auto f = cands.entries[i].frame;
      if (f < 1 || f + 1 > n)
        fail(ErrorCode::OutOfRange,
             std::string(stream_name(stream)) + " candidate " +
                 std::to_string(f) + " outside [1, " + std::to_string(n - 1) +
                 "]");
      require(i == 0 || cands.entries[i - 1].frame < f,
              "candidate frames must be strictly increasing");
    }
  }

  const auto make_single = [&](Stream s, const Candidate& c, Acceptance how) {
    return BoundaryProvenance{c.frame, {{s, c.frame, c.score}}, how,
                              scores[c.frame]};
  };

  if (candidates_by_stream.size() == 1) {
    const auto& [stream, cands] = *candidates_by_stream.begin();
    FusionResult out{BoundarySet(n, cands.frames()), {}};
    for (const auto& c : cands.entries)
      out.provenance.push_back(make_single(stream, c, Acceptance::SingleStream));
    return out;
  }

  const Stream anchor = candidates_by_stream.count(Stream::Global)
                            ? Stream::Global
                            : candidates_by_stream.begin()->first;

  std::map<Stream, std::vector<bool>> consumed;
  for (const auto& [stream, cands] : candidates_by_stream)
    consumed[stream].assign(cands.entries.size(), false);

  std::vector<Accepted> accepted;

  // Stage 1: clusters anchored on the anchor stream.
  const auto& anchor_cands = candidates_by_stream.at(anchor).entries;
  for (std::size_t ai = 0; ai < anchor_cands.size(); ++ai) {
    const Candidate& g = anchor_cands[ai];
    std::vector<std::pair<Stream, std::size_t>> picks;
    bool complete = true;
    for (const auto& [stream, cands] : candidates_by_stream) {
      if (stream == anchor) continue;
      std::optional<std::size_t> best;
      for (std::size_t j = 0; j < cands.entries.size(); ++j) {
        if (consumed[stream][j]) continue;
        const std::size_t d = distance(cands.entries[j].frame, g.frame);
        if (d > cfg.theta_n) continue;
        // Entries are frame-sorted, so strict < keeps the earlier frame on ties.
        if (!best || d < distance(cands.entries[*best].frame, g.frame))
          best = j;
      }
      if (!best) {
        complete = false;
        break;
      }
      picks.emplace_back(stream, *best);
    }
    if (!complete) continue;

    BoundaryProvenance rec{g.frame,
                           {{anchor, g.frame, g.score}},
                           Acceptance::Cluster,
                           scores[g.frame]};
    consumed[anchor][ai] = true;
    for (const auto& [stream, j] : picks) {
      consumed[stream][j] = true;
      const Candidate& c = candidates_by_stream.at(stream).entries[j];
      rec.cluster_members.push_back({stream, c.frame, c.score});
    }
    for (const auto& m : rec.cluster_members) {
      const double s = scores[m.frame];
      if (s > rec.confidence ||
          (s == rec.confidence && m.frame < rec.source_frame)) {
        rec.confidence = s;
        rec.source_frame = m.frame;
      }
    }
    accepted.push_back({std::move(rec), accepted.size()});
  }

  if (accepted.empty()) {
    // No cluster: the most confident candidate overall becomes the reference
    // selection for the salience test.
    std::optional<std::pair<Stream, std::size_t>> best;
    for (const auto& [stream, cands] : candidates_by_stream) {
      for (std::size_t j = 0; j < cands.entries.size(); ++j) {
        if (!best) {
          best = {stream, j};
          continue;
        }
        const auto& cur = candidates_by_stream.at(best->first).entries[best->second];
        const auto& c = cands.entries[j];
        if (scores[c.frame] > scores[cur.frame] ||
            (scores[c.frame] == scores[cur.frame] && c.frame < cur.frame))
          best = {stream, j};
      }
    }
    if (!best) return FusionResult{BoundarySet(n, {}), {}};
    consumed[best->first][best->second] = true;
    const auto& c = candidates_by_stream.at(best->first).entries[best->second];
    accepted.push_back({make_single(best->first, c, Acceptance::Fallback), 0});
  }

  // Stage 2: salient candidates without a cluster.
  double reference = 0.0;
  for (const auto& a : accepted)
    reference = std::max(reference, a.record.confidence);
  const double bar = cfg.salience_factor * reference;
  for (const auto& [stream, cands] : candidates_by_stream) {
    for (std::size_t j = 0; j < cands.entries.size(); ++j) {
      if (consumed[stream][j]) continue;
      const Candidate& c = cands.entries[j];
      if (scores[c.frame] > bar)
        accepted.push_back(
            {make_single(stream, c, Acceptance::Salience), accepted.size()});
    }
  }

  // Stage 3: non-maximum suppression within theta_n.
  std::sort(accepted.begin(), accepted.end(),
            [](const Accepted& a, const Accepted& b) {
              if (a.record.confidence != b.record.confidence)
                return a.record.confidence > b.record.confidence;
              if (a.record.source_frame != b.record.source_frame)
                return a.record.source_frame < b.record.source_frame;
              return a.order < b.order;
            });
  std::vector<BoundaryProvenance> kept;
  for (auto& a : accepted) {
    const bool suppressed =
        std::any_of(kept.begin(), kept.end(), [&](const BoundaryProvenance& k) {
          return distance(k.source_frame, a.record.source_frame) <= cfg.theta_n;
        });
    if (!suppressed) kept.push_back(std::move(a.record));
  }
  std::sort(kept.begin(), kept.end(),
            [](const BoundaryProvenance& a, const BoundaryProvenance& b) {
              return a.source_frame < b.source_frame;
            });

  std::vector<std::size_t> frames;
  frames.reserve(kept.size());
  for (const auto& k : kept) frames.push_back(k.source_frame);
  return FusionResult{BoundarySet(n, std::move(frames)), std::move(kept)};
}

FusionResult detect_boundaries(
    const std::map<Stream, FeatureSequence>& streams,
    const PipelineConfig& cfg) {
  require(!streams.empty(), "at least one feature stream is required");
  const std::size_t n = streams.begin()->second.num_frames();
  std::map<Stream, DifferenceSeries> series;
  std::map<Stream, CandidateSet> candidates;
  for (const auto& [stream, seq] : streams) {
    if (seq.num_frames() != n)
      fail(ErrorCode::InvalidArgument,
           "stream '" + std::string(stream_name(stream)) + "' has " +
               std::to_string(seq.num_frames()) + " frames, expected " +
               std::to_string(n));
    auto diff = compute_difference(seq, cfg.k);
    candidates.emplace(stream, detect_candidates(diff, cfg.alpha,
                                                 std::string(stream_name(stream))));
    series.emplace(stream, std::move(diff));
  }
  const auto scores = confidence_scores(series, cfg.fusion);
  return select_boundaries(candidates, scores, cfg.fusion);
}

BoundarySet equal_split(std::size_t num_frames, std::size_t num_segments) {
  require(num_segments >= 1, "equal split needs at least one segment");
  if (num_segments > num_frames)
    fail(ErrorCode::InvalidArgument,
         "cannot split " + std::to_string(num_frames) + " frames into " +
             std::to_string(num_segments) + " segments");
  std::vector<std::size_t> frames;
  for (std::size_t m = 1; m < num_segments; ++m) {
    // round(m * L / M), halves rounded up, in exact integer arithmetic.
    const std::size_t b =
        (2 * m * num_frames + num_segments) / (2 * num_segments);
    if (frames.empty() || frames.back() != b) frames.push_back(b);
  }
  return BoundarySet(num_frames, std::move(frames));
}

std::string fusion_result_to_json(const FusionResult& result) {
  nlohmann::ordered_json j;
  j["num_frames"] = result.boundaries.num_frames();
  j["boundaries"] = result.boundaries.frames();
  auto records = nlohmann::ordered_json::array();
  for (const auto& p : result.provenance) {
    nlohmann::ordered_json r;
    r["source_frame"] = p.source_frame;
    r["accepted_by"] = acceptance_name(p.accepted_by);
    r["confidence"] = p.confidence;
    auto members = nlohmann::ordered_json::array();
    for (const auto& m : p.cluster_members)
      members.push_back({{"stream", stream_name(m.stream)},
                         {"frame", m.frame},
                         {"score", m.score}});
    r["cluster_members"] = std::move(members);
    records.push_back(std::move(r));
  }
  j["provenance"] = std::move(records);
  return j.dump(2);
}

}  // namespace tempseg
