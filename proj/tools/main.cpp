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

// tempseg command-line front end. Every subcommand stages its outputs and
// writes a run manifest next to them; nothing is left behind on failure.

#include <algorithm>
#include <array>
#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_support.hpp"

namespace cli {
namespace {

constexpr std::array<const char*, TSEG_NUM_STREAMS> kStreamNames{
    "global", "interact", "relation"};

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

fs::path default_manifest(const fs::path& primary) {
  return fs::path(primary.string() + ".manifest.json");
}

Features load_features(const fs::path& path) {
  tseg_features* f = nullptr;
  check(tseg_features_load_any(path.c_str(), &f), "loading " + path.string());
  return Features(f);
}

Labels load_labels(const fs::path& path) {
  tseg_segmentation* s = nullptr;
  check(tseg_segmentation_load(path.c_str(), &s), "loading " + path.string());
  return Labels(s);
}

Json f1_json(const tseg_f1_report& r) {
  return Json{{"precision", r.precision},
              {"recall", r.recall},
              {"f1", r.f1},
              {"matched", r.matched},
              {"matched_pred", r.matched_pred},
              {"num_pred", r.num_pred},
              {"num_gt", r.num_gt},
              {"threshold_frames", r.threshold_frames},
              {"mode", r.mode == TSEG_MATCH_PAPER ? "paper" : "strict"}};
}

// ---- detect ---------------------------------------------------------------

struct DetectArgs {
  std::array<std::string, TSEG_NUM_STREAMS> inputs;
  std::string out, provenance, manifest;
  std::uint64_t k = 5, alpha = 15;
  std::array<double, TSEG_NUM_STREAMS> beta{1.0, 1.0, 0.3};
  std::optional<std::uint64_t> theta_n_frames;
  double theta_n_seconds = 2.0;
  std::string fps;
  std::string normalize = "max";
  double salience = 2.0;
};

void add_detect(CLI::App& app, DetectArgs& a) {
  for (int s = 0; s < TSEG_NUM_STREAMS; ++s)
    app.add_option(std::string("--") + kStreamNames[s], a.inputs[s],
                   std::string(kStreamNames[s]) + " feature file (OTFS or .csv)");
  app.add_option("--out", a.out, "boundary file to write")->required();
  app.add_option("--provenance", a.provenance, "per-boundary provenance JSON");
  app.add_option("--manifest", a.manifest, "run manifest (default <out>.manifest.json)");
  app.add_option("--k", a.k, "difference window length")->capture_default_str();
  app.add_option("--alpha", a.alpha, "candidate radius in frames")->capture_default_str();
  app.add_option("--beta-global", a.beta[0])->capture_default_str();
  app.add_option("--beta-interact", a.beta[1])->capture_default_str();
  app.add_option("--beta-relation", a.beta[2])->capture_default_str();
  app.add_option("--theta-n-frames", a.theta_n_frames,
                 "neighbourhood radius in frames (overrides seconds)");
  app.add_option("--theta-n-seconds", a.theta_n_seconds)->capture_default_str();
  app.add_option("--fps", a.fps, "frame rate for unit conversion (default: from input)");
  app.add_option("--normalize", a.normalize)
      ->check(CLI::IsMember({"none", "max"}))
      ->capture_default_str();
  app.add_option("--salience", a.salience, "salience factor")->capture_default_str();
}

void run_detect(const DetectArgs& a, Manifest& manifest) {
  std::array<Features, TSEG_NUM_STREAMS> features;
  const tseg_features* streams[TSEG_NUM_STREAMS] = {};
  std::optional<Rate> input_rate;
  for (int s = 0; s < TSEG_NUM_STREAMS; ++s) {
    if (a.inputs[s].empty()) continue;
    features[s] = load_features(a.inputs[s]);
    streams[s] = features[s].get();
    manifest.add_input(kStreamNames[s], a.inputs[s]);
    if (!input_rate) {
      Rate r;
      tseg_features_fps(streams[s], &r.num, &r.den);
      input_rate = r;
    }
  }
  if (!input_rate) throw CliError("detect needs at least one feature stream");
  const Rate rate = a.fps.empty() ? *input_rate : parse_rate(a.fps);

  tseg_fusion_config cfg;
  tseg_fusion_config_default(&cfg);
  for (int s = 0; s < TSEG_NUM_STREAMS; ++s) cfg.beta[s] = a.beta[s];
  cfg.theta_n = a.theta_n_frames ? *a.theta_n_frames
                                 : seconds_to_frames(a.theta_n_seconds, rate);
  cfg.normalize = a.normalize == "none" ? TSEG_NORMALIZE_NONE : TSEG_NORMALIZE_MAX;
  cfg.salience_factor = a.salience;

  Json& c = manifest.config();
  c["k"] = a.k;
  c["alpha"] = a.alpha;
  c["beta"] = {{"global", cfg.beta[0]}, {"interact", cfg.beta[1]},
               {"relation", cfg.beta[2]}};
  c["theta_n_frames"] = cfg.theta_n;
  c["fps"] = rate.str();
  c["normalize"] = a.normalize;
  c["salience_factor"] = cfg.salience_factor;

  tseg_fusion* raw = nullptr;
  check(tseg_detect(streams, a.k, a.alpha, &cfg, &raw), "detect");
  const Fusion fusion(raw);
  tseg_boundaries* braw = nullptr;
  check(tseg_fusion_boundaries(fusion.get(), &braw), "detect");
  const Boundaries bounds(braw);

  StagedOutputs outputs;
  check(tseg_boundaries_save(bounds.get(), outputs.stage(a.out).c_str()),
        "writing " + a.out);
  manifest.add_output("boundaries", a.out);
  if (!a.provenance.empty()) {
    char* json = nullptr;
    check(tseg_fusion_provenance_json(fusion.get(), &json), "provenance");
    outputs.write_text(a.provenance, take_string(json) + "\n");
    manifest.add_output("provenance", a.provenance);
  }
  const fs::path mpath = a.manifest.empty() ? default_manifest(a.out) : fs::path(a.manifest);
  outputs.write_text(mpath, manifest.dump());
  outputs.commit();
}

// ---- diff -----------------------------------------------------------------

struct DiffArgs {
  std::string features, out, candidates_out, manifest;
  std::uint64_t k = 5, alpha = 15;
};

void add_diff(CLI::App& app, DiffArgs& a) {
  app.add_option("--features", a.features, "feature file (OTFS or .csv)")->required();
  app.add_option("--out", a.out, "difference CSV (index,value)")->required();
  app.add_option("--k", a.k, "difference window length")->capture_default_str();
  app.add_option("--candidates-out", a.candidates_out, "candidate CSV (frame,score)");
  app.add_option("--alpha", a.alpha, "candidate radius in frames")->capture_default_str();
  app.add_option("--manifest", a.manifest, "run manifest (default <out>.manifest.json)");
}

void run_diff(const DiffArgs& a, Manifest& manifest) {
  const Features f = load_features(a.features);
  manifest.add_input("features", a.features);
  manifest.config()["k"] = a.k;

  tseg_series* sraw = nullptr;
  check(tseg_difference_compute(f.get(), a.k, &sraw), "diff");
  const Series series(sraw);
  const double* values = tseg_series_values(series.get());
  std::string csv = "index,value\n";
  for (std::uint64_t i = 0; i < tseg_series_length(series.get()); ++i)
    csv += std::to_string(i) + "," + format_double(values[i]) + "\n";

  StagedOutputs outputs;
  outputs.write_text(a.out, csv);
  manifest.add_output("difference", a.out);
  if (!a.candidates_out.empty()) {
    manifest.config()["alpha"] = a.alpha;
    tseg_candidates* craw = nullptr;
    check(tseg_candidates_detect(series.get(), a.alpha, &craw), "candidates");
    const Candidates cands(craw);
    std::string text = "frame,score\n";
    for (std::uint64_t i = 0; i < tseg_candidates_count(cands.get()); ++i)
      text += std::to_string(tseg_candidates_frame(cands.get(), i)) + "," +
              format_double(tseg_candidates_score(cands.get(), i)) + "\n";
    outputs.write_text(a.candidates_out, text);
    manifest.add_output("candidates", a.candidates_out);
  }
  const fs::path mpath = a.manifest.empty() ? default_manifest(a.out) : fs::path(a.manifest);
  outputs.write_text(mpath, manifest.dump());
  outputs.commit();
}

// ---- eval -----------------------------------------------------------------

struct EvalArgs {
  std::string pred, gt, pred_dir, gt_dir;
  std::string out, csv, manifest;
  std::string fps = "5";
  std::string match = "strict";
  std::optional<std::uint64_t> threshold_frames;
};

void add_eval(CLI::App& app, EvalArgs& a) {
  app.add_option("--pred", a.pred, "predicted boundaries (.bounds) or labels (.labels)");
  app.add_option("--gt", a.gt, "ground-truth label file");
  app.add_option("--pred-dir", a.pred_dir, "directory of predictions, paired by stem");
  app.add_option("--gt-dir", a.gt_dir, "directory of ground-truth .labels files");
  app.add_option("--out", a.out, "JSON report")->required();
  app.add_option("--csv", a.csv, "per-video CSV report");
  app.add_option("--fps", a.fps, "frame rate of the videos")->capture_default_str();
  app.add_option("--match", a.match, "boundary matching rule")
      ->check(CLI::IsMember({"strict", "paper"}))
      ->capture_default_str();
  app.add_option("--threshold-frames", a.threshold_frames,
                 "extra F1 at a fixed threshold in frames");
  app.add_option("--manifest", a.manifest, "run manifest (default <out>.manifest.json)");
}

struct EvalPair {
  std::string name;
  fs::path pred, gt;
};

std::vector<EvalPair> eval_pairs(const EvalArgs& a) {
  const bool single = !a.pred.empty() || !a.gt.empty();
  const bool batch = !a.pred_dir.empty() || !a.gt_dir.empty();
  if (single == batch)
    throw CliError("give either --pred and --gt, or --pred-dir and --gt-dir");
  if (single) {
    if (a.pred.empty() || a.gt.empty()) throw CliError("--pred and --gt go together");
    return {{fs::path(a.gt).stem().string(), a.pred, a.gt}};
  }
  if (a.pred_dir.empty() || a.gt_dir.empty())
    throw CliError("--pred-dir and --gt-dir go together");

  std::map<std::string, fs::path> preds;
  for (const auto& e : fs::directory_iterator(a.pred_dir)) {
    if (!e.is_regular_file()) continue;
    const auto ext = e.path().extension();
    if (ext != ".bounds" && ext != ".labels") continue;
    const auto [it, fresh] = preds.emplace(e.path().stem().string(), e.path());
    if (!fresh) throw CliError("two predictions for video " + it->first);
  }
  std::vector<EvalPair> pairs;
  for (const auto& e : fs::directory_iterator(a.gt_dir)) {
    if (!e.is_regular_file() || e.path().extension() != ".labels") continue;
    const std::string stem = e.path().stem().string();
    const auto it = preds.find(stem);
    if (it == preds.end()) throw CliError("no prediction for video " + stem);
    pairs.push_back({stem, it->second, e.path()});
  }
  if (pairs.empty()) throw CliError("no .labels files in " + a.gt_dir);
  std::sort(pairs.begin(), pairs.end(),
            [](const EvalPair& x, const EvalPair& y) { return x.name < y.name; });
  return pairs;
}

void run_eval(const EvalArgs& a, Manifest& manifest) {
  const Rate rate = parse_rate(a.fps);
  const tseg_match_mode mode = a.match == "paper" ? TSEG_MATCH_PAPER : TSEG_MATCH_STRICT;
  manifest.config()["fps"] = rate.str();
  manifest.config()["match"] = a.match;
  if (a.threshold_frames) manifest.config()["threshold_frames"] = *a.threshold_frames;

  const auto pairs = eval_pairs(a);
  Json videos = Json::array();
  std::string csv =
      "video,num_frames,precision_small,recall_small,f1_small,threshold_small,"
      "precision_large,recall_large,f1_large,threshold_large,mof";
  if (a.threshold_frames) csv += ",precision_fixed,recall_fixed,f1_fixed";
  csv += "\n";
  std::map<std::string, double> sums;

  for (const auto& p : pairs) {
    manifest.add_input("gt:" + p.name, p.gt);
    manifest.add_input("pred:" + p.name, p.pred);
    const Labels gt = load_labels(p.gt);
    const std::uint64_t n = tseg_segmentation_length(gt.get());

    tseg_boundaries* praw = nullptr;
    if (p.pred.extension() == ".labels") {
      const Labels pl = load_labels(p.pred);
      check(tseg_segmentation_to_boundaries(pl.get(), &praw), p.pred.string());
    } else {
      check(tseg_boundaries_load(p.pred.c_str(), n, &praw), "loading " + p.pred.string());
    }
    const Boundaries pred(praw);

    tseg_f1_report small{}, large{};
    double mof = 0.0;
    check(tseg_evaluate_video(pred.get(), gt.get(), rate.num, rate.den, mode,
                              &small, &large, &mof),
          "evaluating " + p.name);
    Json v{{"video", p.name},
           {"num_frames", n},
           {"f1_small", f1_json(small)},
           {"f1_large", f1_json(large)},
           {"mof", mof}};
    csv += p.name + "," + std::to_string(n);
    for (const auto* r : {&small, &large})
      csv += "," + format_double(r->precision) + "," + format_double(r->recall) +
             "," + format_double(r->f1) + "," + std::to_string(r->threshold_frames);
    csv += "," + format_double(mof);
    sums["precision_small"] += small.precision;
    sums["recall_small"] += small.recall;
    sums["f1_small"] += small.f1;
    sums["precision_large"] += large.precision;
    sums["recall_large"] += large.recall;
    sums["f1_large"] += large.f1;
    sums["mof"] += mof;

    if (a.threshold_frames) {
      tseg_boundaries* graw = nullptr;
      check(tseg_segmentation_to_boundaries(gt.get(), &graw), p.gt.string());
      const Boundaries gtb(graw);
      tseg_f1_report fixed{};
      check(tseg_boundary_f1(pred.get(), gtb.get(), *a.threshold_frames, mode, &fixed),
            "evaluating " + p.name);
      v["f1_fixed"] = f1_json(fixed);
      csv += "," + format_double(fixed.precision) + "," + format_double(fixed.recall) +
             "," + format_double(fixed.f1);
      sums["precision_fixed"] += fixed.precision;
      sums["recall_fixed"] += fixed.recall;
      sums["f1_fixed"] += fixed.f1;
    }
    csv += "\n";
    videos.push_back(std::move(v));
  }

  Json summary{{"videos", pairs.size()}};
  for (const auto& [key, total] : sums) summary[key] = total / double(pairs.size());
  const Json report{{"videos", videos}, {"summary", summary}};

  StagedOutputs outputs;
  outputs.write_text(a.out, report.dump(2) + "\n");
  manifest.add_output("report", a.out);
  if (!a.csv.empty()) {
    outputs.write_text(a.csv, csv);
    manifest.add_output("csv", a.csv);
  }
  const fs::path mpath = a.manifest.empty() ? default_manifest(a.out) : fs::path(a.manifest);
  outputs.write_text(mpath, manifest.dump());
  outputs.commit();
}

// ---- synth ----------------------------------------------------------------

struct SynthArgs {
  std::string out_prefix, manifest;
  std::uint64_t frames = 500, dim = 32, segments = 6, min_len = 40, seed = 42;
  double sigma = 0.05, separation = 1.0;
  std::string fps = "5";
  int streams = 1;
  std::array<std::string, TSEG_NUM_STREAMS> spurious;
  double spurious_height = 0.0;
};

void add_synth(CLI::App& app, SynthArgs& a) {
  app.add_option("--out-prefix", a.out_prefix, "output path prefix")->required();
  app.add_option("--frames", a.frames)->capture_default_str();
  app.add_option("--dim", a.dim)->capture_default_str();
  app.add_option("--segments", a.segments)->capture_default_str();
  app.add_option("--min-len", a.min_len, "minimum segment length")->capture_default_str();
  app.add_option("--sigma", a.sigma, "noise standard deviation")->capture_default_str();
  app.add_option("--separation", a.separation, "mean separation")->capture_default_str();
  app.add_option("--seed", a.seed)->capture_default_str();
  app.add_option("--fps", a.fps)->capture_default_str();
  app.add_option("--streams", a.streams)->check(CLI::IsMember({1, 3}))->capture_default_str();
  for (int s = 0; s < TSEG_NUM_STREAMS; ++s)
    app.add_option(std::string("--spurious-") + kStreamNames[s], a.spurious[s],
                   "comma-separated frames with a one-frame bump");
  app.add_option("--spurious-height", a.spurious_height)->capture_default_str();
  app.add_option("--manifest", a.manifest,
                 "run manifest (default <prefix>.manifest.json)");
}

void run_synth(const SynthArgs& a, Manifest& manifest) {
  const Rate rate = parse_rate(a.fps);
  tseg_synth_spec spec;
  tseg_synth_spec_default(&spec);
  spec.num_frames = a.frames;
  spec.dim = a.dim;
  spec.num_segments = a.segments;
  spec.min_segment_len = a.min_len;
  spec.noise_sigma = a.sigma;
  spec.mean_separation = a.separation;
  spec.seed = a.seed;
  spec.fps_num = rate.num;
  spec.fps_den = rate.den;

  const auto n = std::size_t(a.streams);
  if (n == 1 && (!a.spurious[1].empty() || !a.spurious[2].empty()))
    throw CliError("--spurious-interact/--spurious-relation need --streams 3");
  std::array<std::vector<std::uint64_t>, TSEG_NUM_STREAMS> frames;
  std::vector<tseg_synth_stream> opts(n);
  Json spurious = Json::object();
  for (std::size_t s = 0; s < n; ++s) {
    frames[s] = parse_frame_list(a.spurious[s]);
    opts[s] = {frames[s].data(), frames[s].size(), a.spurious_height};
    spurious[kStreamNames[s]] = frames[s];
  }

  Json& c = manifest.config();
  c["frames"] = a.frames;
  c["dim"] = a.dim;
  c["segments"] = a.segments;
  c["min_len"] = a.min_len;
  c["sigma"] = a.sigma;
  c["separation"] = a.separation;
  c["seed"] = a.seed;
  c["fps"] = rate.str();
  c["streams"] = a.streams;
  c["spurious_frames"] = spurious;
  c["spurious_height"] = a.spurious_height;

  std::vector<tseg_features*> raw(n, nullptr);
  tseg_segmentation* lraw = nullptr;
  tseg_boundaries* braw = nullptr;
  check(tseg_synth_generate(&spec, opts.data(), n, raw.data(), &lraw, &braw), "synth");
  std::vector<Features> features;
  for (auto* f : raw) features.emplace_back(f);
  const Labels labels(lraw);
  const Boundaries bounds(braw);

  StagedOutputs outputs;
  for (std::size_t s = 0; s < n; ++s) {
    const fs::path p = n == 1 ? a.out_prefix + ".otfs"
                              : a.out_prefix + "." + kStreamNames[s] + ".otfs";
    check(tseg_features_save(features[s].get(), outputs.stage(p).c_str()),
          "writing " + p.string());
    manifest.add_output(n == 1 ? "features" : kStreamNames[s], p);
  }
  const fs::path lpath = a.out_prefix + ".labels";
  const fs::path bpath = a.out_prefix + ".bounds";
  check(tseg_segmentation_save(labels.get(), outputs.stage(lpath).c_str()),
        "writing " + lpath.string());
  check(tseg_boundaries_save(bounds.get(), outputs.stage(bpath).c_str()),
        "writing " + bpath.string());
  manifest.add_output("labels", lpath);
  manifest.add_output("boundaries", bpath);
  const fs::path mpath = a.manifest.empty() ? fs::path(a.out_prefix + ".manifest.json")
                                            : fs::path(a.manifest);
  outputs.write_text(mpath, manifest.dump());
  outputs.commit();
}

// ---- graph ----------------------------------------------------------------

struct GraphArgs {
  std::string detections, table, pairs, out, table_out, manifest;
  std::int64_t min_count = 30;
  double theta_r = 80.0, min_score = 0.7;
  std::string metric = "gap";
};

void add_graph(CLI::App& app, GraphArgs& a) {
  app.add_option("--detections", a.detections, "detections JSON")->required();
  app.add_option("--table", a.table, "relation table JSON");
  app.add_option("--pairs", a.pairs, "co-occurrence counts CSV (classA,classB,count)");
  app.add_option("--min-count", a.min_count, "pair count needed to relate two classes")
      ->capture_default_str();
  app.add_option("--theta-r", a.theta_r, "spatial radius in pixels")->capture_default_str();
  app.add_option("--min-score", a.min_score, "detection confidence floor")
      ->capture_default_str();
  app.add_option("--metric", a.metric, "box distance")
      ->check(CLI::IsMember({"gap", "center"}))
      ->capture_default_str();
  app.add_option("--out", a.out, "graphs JSON")->required();
  app.add_option("--table-out", a.table_out, "write the relation table used");
  app.add_option("--manifest", a.manifest, "run manifest (default <out>.manifest.json)");
}

void run_graph(const GraphArgs& a, Manifest& manifest) {
  if (a.table.empty() == a.pairs.empty())
    throw CliError("give exactly one of --table and --pairs");
  tseg_relation_table* traw = nullptr;
  if (!a.table.empty()) {
    check(tseg_relation_table_from_json(read_file(a.table).c_str(), &traw),
          "loading " + a.table);
    manifest.add_input("table", a.table);
  } else {
    check(tseg_relation_table_from_pairs_csv(read_file(a.pairs).c_str(), a.min_count,
                                             &traw),
          "loading " + a.pairs);
    manifest.add_input("pairs", a.pairs);
    manifest.config()["min_count"] = a.min_count;
  }
  const RelationTable table(traw);
  const std::string dets = read_file(a.detections);
  manifest.add_input("detections", a.detections);
  manifest.config()["theta_r"] = a.theta_r;
  manifest.config()["min_score"] = a.min_score;
  manifest.config()["metric"] = a.metric;

  char* graphs = nullptr;
  check(tseg_build_graphs_json(dets.c_str(), table.get(), a.theta_r, a.min_score,
                               a.metric == "center" ? TSEG_BOX_CENTER : TSEG_BOX_GAP,
                               &graphs),
        "building graphs from " + a.detections);

  StagedOutputs outputs;
  outputs.write_text(a.out, take_string(graphs) + "\n");
  manifest.add_output("graphs", a.out);
  if (!a.table_out.empty()) {
    char* json = nullptr;
    check(tseg_relation_table_to_json(table.get(), &json), "relation table");
    outputs.write_text(a.table_out, take_string(json) + "\n");
    manifest.add_output("table", a.table_out);
  }
  const fs::path mpath = a.manifest.empty() ? default_manifest(a.out) : fs::path(a.manifest);
  outputs.write_text(mpath, manifest.dump());
  outputs.commit();
}

// ---- baseline equal-split -------------------------------------------------

struct BaselineArgs {
  std::optional<std::uint64_t> frames, segments;
  std::string gt, out, manifest;
};

void add_baseline(CLI::App& app, BaselineArgs& a) {
  app.add_option("--frames", a.frames, "video length in frames");
  app.add_option("--segments", a.segments, "number of segments");
  app.add_option("--gt", a.gt, "take both from a ground-truth label file");
  app.add_option("--out", a.out, "boundary file to write")->required();
  app.add_option("--manifest", a.manifest, "run manifest (default <out>.manifest.json)");
}

void run_baseline(const BaselineArgs& a, Manifest& manifest) {
  std::uint64_t frames = 0, segments = 0;
  if (!a.gt.empty()) {
    const Labels gt = load_labels(a.gt);
    manifest.add_input("gt", a.gt);
    tseg_boundaries* graw = nullptr;
    check(tseg_segmentation_to_boundaries(gt.get(), &graw), a.gt);
    const Boundaries gtb(graw);
    frames = a.frames.value_or(tseg_segmentation_length(gt.get()));
    segments = a.segments.value_or(tseg_boundaries_count(gtb.get()) + 1);
  } else {
    if (!a.frames || !a.segments)
      throw CliError("equal-split needs --frames and --segments, or --gt");
    frames = *a.frames;
    segments = *a.segments;
  }
  manifest.config()["frames"] = frames;
  manifest.config()["segments"] = segments;

  tseg_boundaries* braw = nullptr;
  check(tseg_equal_split(frames, segments, &braw), "equal-split");
  const Boundaries bounds(braw);
  StagedOutputs outputs;
  check(tseg_boundaries_save(bounds.get(), outputs.stage(a.out).c_str()),
        "writing " + a.out);
  manifest.add_output("boundaries", a.out);
  const fs::path mpath = a.manifest.empty() ? default_manifest(a.out) : fs::path(a.manifest);
  outputs.write_text(mpath, manifest.dump());
  outputs.commit();
}

}  // namespace
}  // namespace cli

int main(int argc, char** argv) {
  using namespace cli;
  CLI::App app{"Training-free temporal action segmentation"};
  app.set_version_flag("--version", std::string(tseg_version()));
  app.require_subcommand(1);

  DetectArgs detect;
  DiffArgs diff;
  EvalArgs eval;
  SynthArgs synth;
  GraphArgs graph;
  BaselineArgs baseline;

  auto* detect_cmd = app.add_subcommand("detect", "detect action boundaries");
  add_detect(*detect_cmd, detect);
  auto* diff_cmd = app.add_subcommand("diff", "temporal feature difference as CSV");
  add_diff(*diff_cmd, diff);
  auto* eval_cmd = app.add_subcommand("eval", "boundary F1 and MoF against ground truth");
  add_eval(*eval_cmd, eval);
  auto* synth_cmd = app.add_subcommand("synth", "generate synthetic feature streams");
  add_synth(*synth_cmd, synth);
  auto* graph_cmd = app.add_subcommand("graph", "per-frame object relation graphs");
  add_graph(*graph_cmd, graph);
  auto* baseline_cmd = app.add_subcommand("baseline", "reference segmenters");
  baseline_cmd->require_subcommand(1);
  auto* equal_cmd = baseline_cmd->add_subcommand("equal-split", "equal-length segments");
  add_baseline(*equal_cmd, baseline);

  CLI11_PARSE(app, argc, argv);

  const std::vector<std::string> args(argv, argv + argc);
  try {
    if (detect_cmd->parsed()) {
      Manifest m("detect", args);
      run_detect(detect, m);
    } else if (diff_cmd->parsed()) {
      Manifest m("diff", args);
      run_diff(diff, m);
    } else if (eval_cmd->parsed()) {
      Manifest m("eval", args);
      run_eval(eval, m);
    } else if (synth_cmd->parsed()) {
      Manifest m("synth", args);
      run_synth(synth, m);
    } else if (graph_cmd->parsed()) {
      Manifest m("graph", args);
      run_graph(graph, m);
    } else if (equal_cmd->parsed()) {
      Manifest m("baseline equal-split", args);
      run_baseline(baseline, m);
    }
  } catch (const std::exception& e) {
    std::cerr << "tempseg: error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
