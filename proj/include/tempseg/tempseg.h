/*
 * Copyright 2026 The tempseg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to libtempseg.
 *
 * Objects are opaque handles created by *_create / *_load / compute calls and
 * released with the matching *_free (NULL is accepted by every *_free).
 * Every fallible call returns a tseg_status; on failure the out-parameters
 * are left untouched and tseg_last_error() describes the problem. The error
 * message is thread-local and valid until the next failing call on the same
 * thread. Strings returned through char** are owned by the caller and must
 * be released with tseg_string_free.
 *
 * Frame indices are 0-based. A boundary b marks frame b as the first frame
 * of a new segment.
 */

#ifndef TEMPSEG_TEMPSEG_H
#define TEMPSEG_TEMPSEG_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(TEMPSEG_BUILDING_LIBRARY)
#    define TSEG_API __declspec(dllexport)
#  else
#    define TSEG_API __declspec(dllimport)
#  endif
#else
#  define TSEG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tseg_status {
  TSEG_OK = 0,
  TSEG_ERR_INVALID_ARGUMENT = 1,
  TSEG_ERR_IO = 2,
  TSEG_ERR_FORMAT = 3,
  TSEG_ERR_OUT_OF_RANGE = 4,
  TSEG_ERR_INTERNAL = 5
} tseg_status;

typedef enum tseg_stream {
  TSEG_STREAM_GLOBAL = 0,
  TSEG_STREAM_INTERACT = 1,
  TSEG_STREAM_RELATION = 2
} tseg_stream;

#define TSEG_NUM_STREAMS 3

typedef enum tseg_normalize {
  TSEG_NORMALIZE_NONE = 0,
  TSEG_NORMALIZE_MAX = 1
} tseg_normalize;

typedef enum tseg_threshold_mode {
  TSEG_THRESHOLD_SMALL = 0,
  TSEG_THRESHOLD_LARGE = 1
} tseg_threshold_mode;

typedef enum tseg_match_mode {
  TSEG_MATCH_STRICT = 0,
  TSEG_MATCH_PAPER = 1
} tseg_match_mode;

typedef enum tseg_box_metric {
  TSEG_BOX_GAP = 0,
  TSEG_BOX_CENTER = 1
} tseg_box_metric;

typedef struct tseg_features tseg_features;
typedef struct tseg_series tseg_series;
typedef struct tseg_candidates tseg_candidates;
typedef struct tseg_boundaries tseg_boundaries;
typedef struct tseg_segmentation tseg_segmentation;
typedef struct tseg_fusion tseg_fusion;
typedef struct tseg_relation_table tseg_relation_table;
typedef struct tseg_mof tseg_mof;

/* ---- library ---------------------------------------------------------- */

TSEG_API const char* tseg_version(void);
TSEG_API const char* tseg_last_error(void);
TSEG_API const char* tseg_status_name(tseg_status status);
TSEG_API const char* tseg_generator_id(void);
TSEG_API void tseg_string_free(char* s);

/* ---- feature streams -------------------------------------------------- */

/* fps_num = fps_den = 0 leaves the frame rate unset (5 fps is assumed). */
TSEG_API tseg_status tseg_features_create(uint64_t num_frames, uint64_t dim,
                                          const float* data,
                                          uint32_t fps_num, uint32_t fps_den,
                                          tseg_features** out);
TSEG_API tseg_status tseg_features_load(const char* path, tseg_features** out);
/* ".csv" is read as CSV, anything else as OTFS. */
TSEG_API tseg_status tseg_features_load_any(const char* path,
                                            tseg_features** out);
TSEG_API tseg_status tseg_features_save(const tseg_features* f,
                                        const char* path);
TSEG_API tseg_status tseg_features_save_csv(const tseg_features* f,
                                            const char* path);
TSEG_API uint64_t tseg_features_num_frames(const tseg_features* f);
TSEG_API uint64_t tseg_features_dim(const tseg_features* f);
/* Frame-major L*D values, valid for the lifetime of the handle. */
TSEG_API const float* tseg_features_data(const tseg_features* f);
/* Effective rate; reports 5/1 when the stream carries none. */
TSEG_API void tseg_features_fps(const tseg_features* f, uint32_t* num,
                                uint32_t* den);
TSEG_API void tseg_features_free(tseg_features* f);

/* ---- temporal difference and candidates -------------------------------- */

TSEG_API tseg_status tseg_difference_compute(const tseg_features* f,
                                             uint64_t k, tseg_series** out);
/* Series over explicit values; an empty valid range is first > last. */
TSEG_API tseg_status tseg_series_create(const double* values, uint64_t length,
                                        uint64_t k, uint64_t valid_first,
                                        uint64_t valid_last,
                                        tseg_series** out);
TSEG_API uint64_t tseg_series_length(const tseg_series* s);
TSEG_API const double* tseg_series_values(const tseg_series* s);
/* Returns 0 when the valid range is empty. */
TSEG_API int tseg_series_valid_range(const tseg_series* s, uint64_t* first,
                                     uint64_t* last);
TSEG_API void tseg_series_free(tseg_series* s);

TSEG_API tseg_status tseg_candidates_detect(const tseg_series* s,
                                            uint64_t alpha,
                                            tseg_candidates** out);
TSEG_API uint64_t tseg_candidates_count(const tseg_candidates* c);
TSEG_API uint64_t tseg_candidates_frame(const tseg_candidates* c, uint64_t i);
TSEG_API double tseg_candidates_score(const tseg_candidates* c, uint64_t i);
TSEG_API void tseg_candidates_free(tseg_candidates* c);

/* ---- boundary fusion -------------------------------------------------- */

typedef struct tseg_fusion_config {
  double beta[TSEG_NUM_STREAMS]; /* indexed by tseg_stream */
  uint64_t theta_n;              /* frames */
  tseg_normalize normalize;
  double salience_factor;
} tseg_fusion_config;

/* beta = (1, 1, 0.3), theta_n = 10, max normalisation, salience 2. */
TSEG_API void tseg_fusion_config_default(tseg_fusion_config* cfg);

/* Confidence S for every frame. series[i] may be NULL for an absent stream;
 * out must hold length-of-series doubles. */
TSEG_API tseg_status tseg_confidence_scores(
    const tseg_series* const series[TSEG_NUM_STREAMS],
    const tseg_fusion_config* cfg, double* out, uint64_t out_length);

/* Votes over per-stream candidates; a NULL entry marks the stream absent. */
TSEG_API tseg_status tseg_select_boundaries(
    const tseg_candidates* const candidates[TSEG_NUM_STREAMS],
    const double* scores, uint64_t num_frames, const tseg_fusion_config* cfg,
    tseg_fusion** out);

/* Full pipeline: difference (window k) -> candidates (alpha) -> fusion. */
TSEG_API tseg_status tseg_detect(
    const tseg_features* const streams[TSEG_NUM_STREAMS], uint64_t k,
    uint64_t alpha, const tseg_fusion_config* cfg, tseg_fusion** out);

TSEG_API uint64_t tseg_fusion_count(const tseg_fusion* r);
TSEG_API uint64_t tseg_fusion_boundary(const tseg_fusion* r, uint64_t i);
TSEG_API tseg_status tseg_fusion_boundaries(const tseg_fusion* r,
                                            tseg_boundaries** out);
TSEG_API tseg_status tseg_fusion_provenance_json(const tseg_fusion* r,
                                                 char** out_json);
TSEG_API void tseg_fusion_free(tseg_fusion* r);

/* ---- boundaries and segmentations ------------------------------------- */

TSEG_API tseg_status tseg_boundaries_create(uint64_t num_frames,
                                            const uint64_t* frames,
                                            uint64_t count,
                                            tseg_boundaries** out);
TSEG_API tseg_status tseg_boundaries_load(const char* path,
                                          uint64_t num_frames,
                                          tseg_boundaries** out);
TSEG_API tseg_status tseg_boundaries_save(const tseg_boundaries* b,
                                          const char* path);
TSEG_API tseg_status tseg_equal_split(uint64_t num_frames,
                                      uint64_t num_segments,
                                      tseg_boundaries** out);
TSEG_API uint64_t tseg_boundaries_num_frames(const tseg_boundaries* b);
TSEG_API uint64_t tseg_boundaries_count(const tseg_boundaries* b);
TSEG_API uint64_t tseg_boundaries_get(const tseg_boundaries* b, uint64_t i);
TSEG_API void tseg_boundaries_free(tseg_boundaries* b);

TSEG_API tseg_status tseg_segmentation_create(const char* const* labels,
                                              uint64_t count,
                                              tseg_segmentation** out);
TSEG_API tseg_status tseg_segmentation_load(const char* path,
                                            tseg_segmentation** out);
TSEG_API tseg_status tseg_segmentation_save(const tseg_segmentation* s,
                                            const char* path);
TSEG_API uint64_t tseg_segmentation_length(const tseg_segmentation* s);
TSEG_API const char* tseg_segmentation_label(const tseg_segmentation* s,
                                             uint64_t i);
TSEG_API tseg_status tseg_segmentation_to_boundaries(
    const tseg_segmentation* s, tseg_boundaries** out);
TSEG_API tseg_status tseg_boundaries_to_segmentation(
    const tseg_boundaries* b, tseg_segmentation** out);
TSEG_API void tseg_segmentation_free(tseg_segmentation* s);

/* ---- metrics ---------------------------------------------------------- */

typedef struct tseg_f1_report {
  double precision;
  double recall;
  double f1;
  uint64_t matched;      /* GT boundaries counted as detected */
  uint64_t matched_pred; /* distinct predictions used */
  uint64_t num_pred;
  uint64_t num_gt;
  uint64_t threshold_frames;
  tseg_match_mode mode;
} tseg_f1_report;

TSEG_API tseg_status tseg_f1_threshold(uint64_t num_frames, uint32_t fps_num,
                                       uint32_t fps_den,
                                       tseg_threshold_mode mode,
                                       uint64_t* out_frames);
TSEG_API tseg_status tseg_boundary_f1(const tseg_boundaries* pred,
                                      const tseg_boundaries* gt,
                                      uint64_t threshold_frames,
                                      tseg_match_mode mode,
                                      tseg_f1_report* out);

/* Maximising assignment over a row-major rows x cols matrix. out_assignment
 * holds one entry per row: the column, or -1 for a row left on padding. */
TSEG_API tseg_status tseg_hungarian(const double* values, uint64_t rows,
                                    uint64_t cols, int64_t* out_assignment,
                                    double* out_total);

TSEG_API tseg_status tseg_mof_compute(const tseg_segmentation* pred,
                                      const tseg_segmentation* gt,
                                      tseg_mof** out);
TSEG_API double tseg_mof_value(const tseg_mof* m);
TSEG_API uint64_t tseg_mof_correct_frames(const tseg_mof* m);
TSEG_API uint64_t tseg_mof_total_frames(const tseg_mof* m);
TSEG_API uint64_t tseg_mof_assignment_count(const tseg_mof* m);
TSEG_API void tseg_mof_assignment(const tseg_mof* m, uint64_t i,
                                  const char** pred_label,
                                  const char** gt_label);
TSEG_API void tseg_mof_free(tseg_mof* m);

/* Boundary F1 at both thresholds plus MoF of the boundaries' segments. */
TSEG_API tseg_status tseg_evaluate_video(const tseg_boundaries* pred,
                                         const tseg_segmentation* gt,
                                         uint32_t fps_num, uint32_t fps_den,
                                         tseg_match_mode mode,
                                         tseg_f1_report* small_out,
                                         tseg_f1_report* large_out,
                                         double* mof_out);

/* ---- object relation graphs ------------------------------------------- */

TSEG_API tseg_status tseg_relation_table_from_pairs(
    const char* const* class_a, const char* const* class_b,
    const int64_t* counts, uint64_t count, int64_t min_count,
    tseg_relation_table** out);
TSEG_API tseg_status tseg_relation_table_from_pairs_csv(
    const char* csv_text, int64_t min_count, tseg_relation_table** out);
TSEG_API tseg_status tseg_relation_table_from_json(const char* json_text,
                                                   tseg_relation_table** out);
TSEG_API tseg_status tseg_relation_table_to_json(const tseg_relation_table* t,
                                                 char** out_json);
TSEG_API int tseg_relation_table_related(const tseg_relation_table* t,
                                         const char* a, const char* b);
TSEG_API void tseg_relation_table_free(tseg_relation_table* t);

/* Detections JSON array in, array of per-frame graphs out. */
TSEG_API tseg_status tseg_build_graphs_json(const char* detections_json,
                                            const tseg_relation_table* table,
                                            double theta_r, double min_score,
                                            tseg_box_metric metric,
                                            char** out_json);

/* ---- synthetic data --------------------------------------------------- */

typedef struct tseg_synth_spec {
  uint64_t num_frames;
  uint64_t dim;
  uint64_t num_segments;
  uint64_t min_segment_len;
  double noise_sigma;
  double mean_separation;
  uint64_t seed;
  uint32_t fps_num;
  uint32_t fps_den;
} tseg_synth_spec;

typedef struct tseg_synth_stream {
  const uint64_t* spurious_frames;
  uint64_t num_spurious;
  double spurious_height;
} tseg_synth_stream;

/* L=500, D=32, M=6, min length 40, sigma 0.05, separation 1, seed 42, 5 fps */
TSEG_API void tseg_synth_spec_default(tseg_synth_spec* spec);

/* out_streams must hold num_streams handles. Any of out_labels and
 * out_boundaries may be NULL. */
TSEG_API tseg_status tseg_synth_generate(const tseg_synth_spec* spec,
                                         const tseg_synth_stream* streams,
                                         uint64_t num_streams,
                                         tseg_features** out_streams,
                                         tseg_segmentation** out_labels,
                                         tseg_boundaries** out_boundaries);

#ifdef __cplusplus
}
#endif

#endif
