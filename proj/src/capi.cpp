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

#include <cstring>
#include <map>
#include <memory>
#include <string>

#include "tempseg/boundary_select.hpp"
#include "tempseg/error.hpp"
#include "tempseg/feature_store.hpp"
#include "tempseg/hungarian.hpp"
#include "tempseg/metrics.hpp"
#include "tempseg/relation_graph.hpp"
#include "tempseg/synthetic.hpp"
#include "tempseg/tempseg.h"

#ifndef TEMPSEG_VERSION
#define TEMPSEG_VERSION "0.0.0"
#endif

struct tseg_features {
  tempseg::FeatureSequence value;
};
struct tseg_series {
  tempseg::DifferenceSeries value;
};
struct tseg_candidates {
  tempseg::CandidateSet value;
};
struct tseg_boundaries {
  tempseg::BoundarySet value;
};
struct tseg_segmentation {
  tempseg::Segmentation value;
};
struct tseg_fusion {
  tempseg::FusionResult value;
};
struct tseg_relation_table {
  tempseg::RelationTable value;
};
struct tseg_mof {
  tempseg::MofReport value;
  std::vector<std::pair<std::string, std::string>> pairs;
};

namespace {

using namespace tempseg;

thread_local std::string g_last_error;

tseg_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument:
      return TSEG_ERR_INVALID_ARGUMENT;
    case ErrorCode::Io:
      return TSEG_ERR_IO;
    case ErrorCode::Format:
      return TSEG_ERR_FORMAT;
    case ErrorCode::OutOfRange:
      return TSEG_ERR_OUT_OF_RANGE;
  }
  return TSEG_ERR_INTERNAL;
}

template <typename Fn>
tseg_status guarded(Fn&& fn) noexcept {
  try {
    fn();
    return TSEG_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return TSEG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TSEG_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return TSEG_ERR_INTERNAL;
  }
}

void need(const void* p, const char* name) {
  if (!p) fail(ErrorCode::InvalidArgument, std::string(name) + " is NULL");
}

std::optional<FrameRate> rate_or_null(uint32_t num, uint32_t den) {
  if (num == 0 && den == 0) return std::nullopt;
  return FrameRate{num, den};
}

FrameRate rate(uint32_t num, uint32_t den) {
  require(num > 0 && den > 0, "fps must be positive");
  return FrameRate{num, den};
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

FusionConfig to_config(const tseg_fusion_config* cfg) {
  FusionConfig out;
  if (!cfg) return out;
  out.beta_global = cfg->beta[TSEG_STREAM_GLOBAL];
  out.beta_interact = cfg->beta[TSEG_STREAM_INTERACT];
  out.beta_relation = cfg->beta[TSEG_STREAM_RELATION];
  out.theta_n = cfg->theta_n;
  require(cfg->normalize == TSEG_NORMALIZE_NONE ||
              cfg->normalize == TSEG_NORMALIZE_MAX,
          "unknown normalisation mode");
  out.normalize =
      cfg->normalize == TSEG_NORMALIZE_NONE ? Normalize::None : Normalize::Max;
  out.salience_factor = cfg->salience_factor;
  return out;
}

MatchMode to_match(tseg_match_mode m) {
  require(m == TSEG_MATCH_STRICT || m == TSEG_MATCH_PAPER,
          "unknown match mode");
  return m == TSEG_MATCH_STRICT ? MatchMode::Strict : MatchMode::Paper;
}

void fill_report(const F1Report& r, tseg_f1_report* out) {
  out->precision = r.precision;
  out->recall = r.recall;
  out->f1 = r.f1;
  out->matched = r.matched;
  out->matched_pred = r.matched_pred;
  out->num_pred = r.num_pred;
  out->num_gt = r.num_gt;
  out->threshold_frames = r.threshold_frames;
  out->mode = r.mode == MatchMode::Strict ? TSEG_MATCH_STRICT : TSEG_MATCH_PAPER;
}

constexpr Stream kStreamOf[TSEG_NUM_STREAMS] = {
    Stream::Global, Stream::Interact, Stream::Relation};

}  // namespace

extern "C" {

const char* tseg_version(void) { return TEMPSEG_VERSION; }

const char* tseg_last_error(void) { return g_last_error.c_str(); }

const char* tseg_status_name(tseg_status status) {
  switch (status) {
    case TSEG_OK:
      return "ok";
    case TSEG_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case TSEG_ERR_IO:
      return "i/o error";
    case TSEG_ERR_FORMAT:
      return "format error";
    case TSEG_ERR_OUT_OF_RANGE:
      return "out of range";
    case TSEG_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* tseg_generator_id(void) { return kGeneratorId.data(); }

void tseg_string_free(char* s) { std::free(s); }

// features

tseg_status tseg_features_create(uint64_t num_frames, uint64_t dim,
                                 const float* data, uint32_t fps_num,
                                 uint32_t fps_den, tseg_features** out) {
  return guarded([&] {
    need(out, "out");
    require(num_frames >= 1 && dim >= 1,
            "num_frames and dim must be at least 1");
    need(data, "data");
    std::vector<float> values(data, data + num_frames * dim);
    *out = new tseg_features{FeatureSequence(num_frames, dim, std::move(values),
                                             rate_or_null(fps_num, fps_den))};
  });
}

tseg_status tseg_features_load(const char* path, tseg_features** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new tseg_features{load_features(path)};
  });
}

tseg_status tseg_features_load_any(const char* path, tseg_features** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new tseg_features{load_features_any(path)};
  });
}

tseg_status tseg_features_save(const tseg_features* f, const char* path) {
  return guarded([&] {
    need(f, "features");
    need(path, "path");
    save_features(f->value, path);
  });
}

tseg_status tseg_features_save_csv(const tseg_features* f, const char* path) {
  return guarded([&] {
    need(f, "features");
    need(path, "path");
    save_features_csv(f->value, path);
  });
}

uint64_t tseg_features_num_frames(const tseg_features* f) {
  return f ? f->value.num_frames() : 0;
}

uint64_t tseg_features_dim(const tseg_features* f) {
  return f ? f->value.dim() : 0;
}

const float* tseg_features_data(const tseg_features* f) {
  return f ? f->value.data().data() : nullptr;
}

void tseg_features_fps(const tseg_features* f, uint32_t* num, uint32_t* den) {
  const FrameRate r = f ? f->value.effective_fps() : kDefaultFrameRate;
  if (num) *num = r.num;
  if (den) *den = r.den;
}

void tseg_features_free(tseg_features* f) { delete f; }

// difference series and candidates

tseg_status tseg_difference_compute(const tseg_features* f, uint64_t k,
                                    tseg_series** out) {
  return guarded([&] {
    need(f, "features");
    need(out, "out");
    *out = new tseg_series{compute_difference(f->value, k)};
  });
}

tseg_status tseg_series_create(const double* values, uint64_t length,
                               uint64_t k, uint64_t valid_first,
                               uint64_t valid_last, tseg_series** out) {
  return guarded([&] {
    need(out, "out");
    require(length >= 1, "series length must be at least 1");
    need(values, "values");
    *out = new tseg_series{DifferenceSeries(
        std::vector<double>(values, values + length), k, valid_first,
        valid_last)};
  });
}

uint64_t tseg_series_length(const tseg_series* s) {
  return s ? s->value.size() : 0;
}

const double* tseg_series_values(const tseg_series* s) {
  return s ? s->value.values().data() : nullptr;
}

int tseg_series_valid_range(const tseg_series* s, uint64_t* first,
                            uint64_t* last) {
  if (!s || !s->value.has_valid_range()) return 0;
  if (first) *first = s->value.valid_first();
  if (last) *last = s->value.valid_last();
  return 1;
}

void tseg_series_free(tseg_series* s) { delete s; }

tseg_status tseg_candidates_detect(const tseg_series* s, uint64_t alpha,
                                   tseg_candidates** out) {
  return guarded([&] {
    need(s, "series");
    need(out, "out");
    *out = new tseg_candidates{detect_candidates(s->value, alpha)};
  });
}

uint64_t tseg_candidates_count(const tseg_candidates* c) {
  return c ? c->value.size() : 0;
}

uint64_t tseg_candidates_frame(const tseg_candidates* c, uint64_t i) {
  return c && i < c->value.size() ? c->value.entries[i].frame : 0;
}

double tseg_candidates_score(const tseg_candidates* c, uint64_t i) {
  return c && i < c->value.size() ? c->value.entries[i].score : 0.0;
}

void tseg_candidates_free(tseg_candidates* c) { delete c; }

// fusion

void tseg_fusion_config_default(tseg_fusion_config* cfg) {
  if (!cfg) return;
  const FusionConfig d;
  cfg->beta[TSEG_STREAM_GLOBAL] = d.beta_global;
  cfg->beta[TSEG_STREAM_INTERACT] = d.beta_interact;
  cfg->beta[TSEG_STREAM_RELATION] = d.beta_relation;
  cfg->theta_n = d.theta_n;
  cfg->normalize = TSEG_NORMALIZE_MAX;
  cfg->salience_factor = d.salience_factor;
}

tseg_status tseg_confidence_scores(
    const tseg_series* const series[TSEG_NUM_STREAMS],
    const tseg_fusion_config* cfg, double* out, uint64_t out_length) {
  return guarded([&] {
    need(series, "series");
    need(out, "out");
    std::map<Stream, DifferenceSeries> by_stream;
    for (int i = 0; i < TSEG_NUM_STREAMS; ++i)
      if (series[i]) by_stream.emplace(kStreamOf[i], series[i]->value);
    const auto scores = confidence_scores(by_stream, to_config(cfg));
    require(out_length >= scores.size(), "output buffer too small");
    std::copy(scores.begin(), scores.end(), out);
  });
}

tseg_status tseg_select_boundaries(
    const tseg_candidates* const candidates[TSEG_NUM_STREAMS],
    const double* scores, uint64_t num_frames, const tseg_fusion_config* cfg,
    tseg_fusion** out) {
  return guarded([&] {
    need(candidates, "candidates");
    need(scores, "scores");
    need(out, "out");
    std::map<Stream, CandidateSet> by_stream;
    for (int i = 0; i < TSEG_NUM_STREAMS; ++i)
      if (candidates[i]) by_stream.emplace(kStreamOf[i], candidates[i]->value);
    *out = new tseg_fusion{select_boundaries(
        by_stream, std::span<const double>(scores, num_frames),
        to_config(cfg))};
  });
}

tseg_status tseg_detect(const tseg_features* const streams[TSEG_NUM_STREAMS],
                        uint64_t k, uint64_t alpha,
                        const tseg_fusion_config* cfg, tseg_fusion** out) {
  return guarded([&] {
    need(streams, "streams");
    need(out, "out");
    std::map<Stream, FeatureSequence> by_stream;
    for (int i = 0; i < TSEG_NUM_STREAMS; ++i)
      if (streams[i]) by_stream.emplace(kStreamOf[i], streams[i]->value);
    PipelineConfig pc;
    pc.k = k;
    pc.alpha = alpha;
    pc.fusion = to_config(cfg);
    *out = new tseg_fusion{detect_boundaries(by_stream, pc)};
  });
}

uint64_t tseg_fusion_count(const tseg_fusion* r) {
  return r ? r->value.boundaries.size() : 0;
}

uint64_t tseg_fusion_boundary(const tseg_fusion* r, uint64_t i) {
  return r && i < r->value.boundaries.size() ? r->value.boundaries.frames()[i]
                                             : 0;
}

tseg_status tseg_fusion_boundaries(const tseg_fusion* r,
                                   tseg_boundaries** out) {
  return guarded([&] {
    need(r, "fusion");
    need(out, "out");
    *out = new tseg_boundaries{r->value.boundaries};
  });
}

tseg_status tseg_fusion_provenance_json(const tseg_fusion* r,
                                        char** out_json) {
  return guarded([&] {
    need(r, "fusion");
    need(out_json, "out_json");
    *out_json = copy_string(fusion_result_to_json(r->value));
  });
}

void tseg_fusion_free(tseg_fusion* r) { delete r; }

// boundaries and segmentations

tseg_status tseg_boundaries_create(uint64_t num_frames, const uint64_t* frames,
                                   uint64_t count, tseg_boundaries** out) {
  return guarded([&] {
    need(out, "out");
    if (count > 0) need(frames, "frames");
    std::vector<std::size_t> v(frames, frames + count);
    *out = new tseg_boundaries{BoundarySet(num_frames, std::move(v))};
  });
}

tseg_status tseg_boundaries_load(const char* path, uint64_t num_frames,
                                 tseg_boundaries** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new tseg_boundaries{load_boundaries(path, num_frames)};
  });
}

tseg_status tseg_boundaries_save(const tseg_boundaries* b, const char* path) {
  return guarded([&] {
    need(b, "boundaries");
    need(path, "path");
    save_boundaries(b->value, path);
  });
}

tseg_status tseg_equal_split(uint64_t num_frames, uint64_t num_segments,
                             tseg_boundaries** out) {
  return guarded([&] {
    need(out, "out");
    *out = new tseg_boundaries{equal_split(num_frames, num_segments)};
  });
}

uint64_t tseg_boundaries_num_frames(const tseg_boundaries* b) {
  return b ? b->value.num_frames() : 0;
}

uint64_t tseg_boundaries_count(const tseg_boundaries* b) {
  return b ? b->value.size() : 0;
}

uint64_t tseg_boundaries_get(const tseg_boundaries* b, uint64_t i) {
  return b && i < b->value.size() ? b->value.frames()[i] : 0;
}

void tseg_boundaries_free(tseg_boundaries* b) { delete b; }

tseg_status tseg_segmentation_create(const char* const* labels, uint64_t count,
                                     tseg_segmentation** out) {
  return guarded([&] {
    need(out, "out");
    need(labels, "labels");
    std::vector<std::string> v;
    v.reserve(count);
    for (uint64_t i = 0; i < count; ++i) {
      need(labels[i], "label");
      v.emplace_back(labels[i]);
    }
    *out = new tseg_segmentation{Segmentation(std::move(v))};
  });
}

tseg_status tseg_segmentation_load(const char* path, tseg_segmentation** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new tseg_segmentation{load_labels(path)};
  });
}

tseg_status tseg_segmentation_save(const tseg_segmentation* s,
                                   const char* path) {
  return guarded([&] {
    need(s, "segmentation");
    need(path, "path");
    save_labels(s->value, path);
  });
}

uint64_t tseg_segmentation_length(const tseg_segmentation* s) {
  return s ? s->value.size() : 0;
}

const char* tseg_segmentation_label(const tseg_segmentation* s, uint64_t i) {
  return s && i < s->value.size() ? s->value[i].c_str() : nullptr;
}

tseg_status tseg_segmentation_to_boundaries(const tseg_segmentation* s,
                                            tseg_boundaries** out) {
  return guarded([&] {
    need(s, "segmentation");
    need(out, "out");
    *out = new tseg_boundaries{segmentation_to_boundaries(s->value)};
  });
}

tseg_status tseg_boundaries_to_segmentation(const tseg_boundaries* b,
                                            tseg_segmentation** out) {
  return guarded([&] {
    need(b, "boundaries");
    need(out, "out");
    *out = new tseg_segmentation{boundaries_to_segmentation(b->value)};
  });
}

void tseg_segmentation_free(tseg_segmentation* s) { delete s; }

// metrics

tseg_status tseg_f1_threshold(uint64_t num_frames, uint32_t fps_num,
                              uint32_t fps_den, tseg_threshold_mode mode,
                              uint64_t* out_frames) {
  return guarded([&] {
    need(out_frames, "out_frames");
    require(mode == TSEG_THRESHOLD_SMALL || mode == TSEG_THRESHOLD_LARGE,
            "unknown threshold mode");
    *out_frames = f1_threshold(
        num_frames, rate(fps_num, fps_den),
        mode == TSEG_THRESHOLD_SMALL ? ThresholdMode::Small
                                     : ThresholdMode::Large);
  });
}

tseg_status tseg_boundary_f1(const tseg_boundaries* pred,
                             const tseg_boundaries* gt,
                             uint64_t threshold_frames, tseg_match_mode mode,
                             tseg_f1_report* out) {
  return guarded([&] {
    need(pred, "pred");
    need(gt, "gt");
    need(out, "out");
    fill_report(boundary_f1(pred->value, gt->value, threshold_frames,
                            to_match(mode)),
                out);
  });
}

tseg_status tseg_hungarian(const double* values, uint64_t rows, uint64_t cols,
                           int64_t* out_assignment, double* out_total) {
  return guarded([&] {
    require(rows > 0 && cols > 0, "assignment matrix must not be empty");
    need(values, "values");
    need(out_assignment, "out_assignment");
    const Assignment a = hungarian(
        Matrix(rows, cols, std::vector<double>(values, values + rows * cols)),
        Objective::Maximize);
    for (uint64_t r = 0; r < rows; ++r)
      out_assignment[r] =
          a.row_to_col[r] ? static_cast<int64_t>(*a.row_to_col[r]) : -1;
    if (out_total) *out_total = a.total;
  });
}

tseg_status tseg_mof_compute(const tseg_segmentation* pred,
                             const tseg_segmentation* gt, tseg_mof** out) {
  return guarded([&] {
    need(pred, "pred");
    need(gt, "gt");
    need(out, "out");
    auto report = mof(pred->value, gt->value);
    std::vector<std::pair<std::string, std::string>> pairs(
        report.assignment.begin(), report.assignment.end());
    *out = new tseg_mof{std::move(report), std::move(pairs)};
  });
}

double tseg_mof_value(const tseg_mof* m) { return m ? m->value.mof : 0.0; }

uint64_t tseg_mof_correct_frames(const tseg_mof* m) {
  return m ? m->value.correct_frames : 0;
}

uint64_t tseg_mof_total_frames(const tseg_mof* m) {
  return m ? m->value.total_frames : 0;
}

uint64_t tseg_mof_assignment_count(const tseg_mof* m) {
  return m ? m->pairs.size() : 0;
}

void tseg_mof_assignment(const tseg_mof* m, uint64_t i, const char** pred_label,
                         const char** gt_label) {
  const bool ok = m && i < m->pairs.size();
  if (pred_label) *pred_label = ok ? m->pairs[i].first.c_str() : nullptr;
  if (gt_label) *gt_label = ok ? m->pairs[i].second.c_str() : nullptr;
}

void tseg_mof_free(tseg_mof* m) { delete m; }

tseg_status tseg_evaluate_video(const tseg_boundaries* pred,
                                const tseg_segmentation* gt, uint32_t fps_num,
                                uint32_t fps_den, tseg_match_mode mode,
                                tseg_f1_report* small_out,
                                tseg_f1_report* large_out, double* mof_out) {
  return guarded([&] {
    need(pred, "pred");
    need(gt, "gt");
    const auto r = evaluate_video(pred->value, gt->value,
                                  rate(fps_num, fps_den), to_match(mode));
    if (small_out) fill_report(r.small, small_out);
    if (large_out) fill_report(r.large, large_out);
    if (mof_out) *mof_out = r.mof.mof;
  });
}

// relation graphs

tseg_status tseg_relation_table_from_pairs(const char* const* class_a,
                                           const char* const* class_b,
                                           const int64_t* counts,
                                           uint64_t count, int64_t min_count,
                                           tseg_relation_table** out) {
  return guarded([&] {
    need(out, "out");
    std::vector<PairCount> pairs;
    if (count > 0) {
      need(class_a, "class_a");
      need(class_b, "class_b");
      need(counts, "counts");
    }
    for (uint64_t i = 0; i < count; ++i) {
      need(class_a[i], "class_a entry");
      need(class_b[i], "class_b entry");
      pairs.push_back({class_a[i], class_b[i], counts[i]});
    }
    *out = new tseg_relation_table{build_table(pairs, min_count)};
  });
}

tseg_status tseg_relation_table_from_pairs_csv(const char* csv_text,
                                               int64_t min_count,
                                               tseg_relation_table** out) {
  return guarded([&] {
    need(csv_text, "csv_text");
    need(out, "out");
    *out = new tseg_relation_table{
        build_table(parse_pair_counts_csv(csv_text), min_count)};
  });
}

tseg_status tseg_relation_table_from_json(const char* json_text,
                                          tseg_relation_table** out) {
  return guarded([&] {
    need(json_text, "json_text");
    need(out, "out");
    *out = new tseg_relation_table{parse_table_json(json_text)};
  });
}

tseg_status tseg_relation_table_to_json(const tseg_relation_table* t,
                                        char** out_json) {
  return guarded([&] {
    need(t, "table");
    need(out_json, "out_json");
    *out_json = copy_string(table_to_json(t->value));
  });
}

int tseg_relation_table_related(const tseg_relation_table* t, const char* a,
                                const char* b) {
  if (!t || !a || !b) return 0;
  return t->value.related(a, b) ? 1 : 0;
}

void tseg_relation_table_free(tseg_relation_table* t) { delete t; }

tseg_status tseg_build_graphs_json(const char* detections_json,
                                   const tseg_relation_table* table,
                                   double theta_r, double min_score,
                                   tseg_box_metric metric, char** out_json) {
  return guarded([&] {
    need(detections_json, "detections_json");
    need(table, "table");
    need(out_json, "out_json");
    require(metric == TSEG_BOX_GAP || metric == TSEG_BOX_CENTER,
            "unknown box metric");
    const BoxMetric m =
        metric == TSEG_BOX_GAP ? BoxMetric::Gap : BoxMetric::Center;
    std::vector<RelationGraph> graphs;
    for (const auto& frame : parse_detections_json(detections_json))
      graphs.push_back(build_graph(frame, table->value, theta_r, min_score, m));
    *out_json = copy_string(graphs_to_json(graphs));
  });
}

// synthetic data

void tseg_synth_spec_default(tseg_synth_spec* spec) {
  if (!spec) return;
  const SynthSpec d;
  spec->num_frames = d.num_frames;
  spec->dim = d.dim;
  spec->num_segments = d.num_segments;
  spec->min_segment_len = d.min_segment_len;
  spec->noise_sigma = d.noise_sigma;
  spec->mean_separation = d.mean_separation;
  spec->seed = d.seed;
  spec->fps_num = d.fps.num;
  spec->fps_den = d.fps.den;
}

tseg_status tseg_synth_generate(const tseg_synth_spec* spec,
                                const tseg_synth_stream* streams,
                                uint64_t num_streams,
                                tseg_features** out_streams,
                                tseg_segmentation** out_labels,
                                tseg_boundaries** out_boundaries) {
  return guarded([&] {
    need(spec, "spec");
    need(out_streams, "out_streams");
    require(num_streams >= 1, "at least one stream must be generated");
    SynthSpec s;
    s.num_frames = spec->num_frames;
    s.dim = spec->dim;
    s.num_segments = spec->num_segments;
    s.min_segment_len = spec->min_segment_len;
    s.noise_sigma = spec->noise_sigma;
    s.mean_separation = spec->mean_separation;
    s.seed = spec->seed;
    s.fps = rate(spec->fps_num, spec->fps_den);

    std::vector<StreamOptions> opts(num_streams);
    if (streams) {
      for (uint64_t i = 0; i < num_streams; ++i) {
        if (streams[i].num_spurious > 0)
          need(streams[i].spurious_frames, "spurious_frames");
        opts[i].spurious_frames.assign(
            streams[i].spurious_frames,
            streams[i].spurious_frames + streams[i].num_spurious);
        opts[i].spurious_height = streams[i].spurious_height;
      }
    }
    auto result = generate_streams(s, opts);

    // Allocate everything before publishing so a failure leaks nothing.
    std::vector<std::unique_ptr<tseg_features>> feats;
    for (auto& f : result.streams)
      feats.push_back(std::make_unique<tseg_features>(tseg_features{std::move(f)}));
    auto labels = std::make_unique<tseg_segmentation>(
        tseg_segmentation{std::move(result.labels)});
    auto bounds = std::make_unique<tseg_boundaries>(
        tseg_boundaries{std::move(result.boundaries)});
    for (uint64_t i = 0; i < num_streams; ++i) out_streams[i] = feats[i].release();
    if (out_labels) *out_labels = labels.release();
    if (out_boundaries) *out_boundaries = bounds.release();
  });
}

}  // extern "C"
