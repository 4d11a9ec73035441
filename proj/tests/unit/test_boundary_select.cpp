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

#include <doctest.h>

#include <random>

#include <json.hpp>

#include "oracles.hpp"
#include "tempseg/boundary_select.hpp"
#include "tempseg/error.hpp"

using namespace tempseg;

namespace {

using Frames = std::vector<std::size_t>;

CandidateSet cands(const Frames& frames, std::string id = {}) {
  CandidateSet c;
  for (auto f : frames) c.entries.push_back({f, 1.0});
  c.alpha = 1;
  c.stream_id = std::move(id);
  return c;
}

DifferenceSeries full(std::vector<double> v) {
  const std::size_t last = v.size() - 1;
  return DifferenceSeries(std::move(v), 1, 0, last);
}

// Range [1, L-1]: every candidate is a legal boundary.
DifferenceSeries interior(std::vector<double> v) {
  v.front() = 0.0;
  const std::size_t last = v.size() - 1;
  return DifferenceSeries(std::move(v), 1, 1, last);
}

FusionConfig raw_config(std::size_t theta) {
  FusionConfig cfg;
  cfg.normalize = Normalize::None;
  cfg.theta_n = theta;
  return cfg;
}

struct Instance {
  std::map<Stream, CandidateSet> cands;
  std::map<Stream, Frames> frames;
  std::vector<double> scores;
  std::size_t theta;
};

// A few streams whose candidates crowd a short timeline so clusters, collisions
// and salience cases all occur.
Instance random_instance(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len(20, 120), streams(1, 3),
      theta(0, 12), count(0, 6);
  std::uniform_int_distribution<int> level(1, 20);
  Instance inst;
  const std::size_t n = len(rng);
  inst.theta = theta(rng);
  inst.scores.resize(n);
  for (auto& s : inst.scores) s = level(rng) / 4.0;
  std::uniform_int_distribution<std::size_t> frame(1, n - 1);
  const std::size_t k = streams(rng);
  std::vector<Stream> all{Stream::Global, Stream::Interact, Stream::Relation};
  std::shuffle(all.begin(), all.end(), rng);
  for (std::size_t s = 0; s < k; ++s) {
    std::set<std::size_t> picked;
    const std::size_t c = count(rng);
    for (std::size_t i = 0; i < c; ++i) picked.insert(frame(rng));
    Frames f(picked.begin(), picked.end());
    inst.frames[all[s]] = f;
    inst.cands[all[s]] = cands(f);
  }
  return inst;
}

}  // namespace

TEST_CASE("confidence_scores, identity weighting") {
  FusionConfig cfg = raw_config(10);
  cfg.beta_global = 1.0;
  const auto s = confidence_scores({{Stream::Global, full({0, 1.5, 4})}}, cfg);
  CHECK(s == std::vector<double>{0, 1.5, 4});
}

TEST_CASE("confidence_scores, weighted sum without normalization") {
  const auto s = confidence_scores({{Stream::Global, full({0, 2, 0})},
                                    {Stream::Interact, full({0, 1, 0})},
                                    {Stream::Relation, full({0, 0, 0})}},
                                   raw_config(10));
  CHECK(s == std::vector<double>{0, 3, 0});
}

TEST_CASE("confidence_scores, max normalization") {
  FusionConfig cfg;
  const std::vector<double> g{0, 4, 1, 2, 0}, i{0, 0, 2, 1, 0};
  const auto s = confidence_scores(
      {{Stream::Global, full(g)}, {Stream::Interact, full(i)}}, cfg);
  for (std::size_t x = 0; x < g.size(); ++x)
    CHECK(s[x] == doctest::Approx(g[x] / 4 + i[x] / 2));

  // all-zero stream contributes nothing
  const auto z = confidence_scores(
      {{Stream::Global, full(g)}, {Stream::Relation, full({0, 0, 0, 0, 0})}}, cfg);
  for (std::size_t x = 0; x < g.size(); ++x) CHECK(z[x] == g[x] / 4);

  CHECK_THROWS_AS(confidence_scores({{Stream::Global, full(g)},
                                     {Stream::Interact, full({0, 1})}},
                                    cfg),
                  Error);
}

TEST_CASE("single stream passes its candidates through") {
  std::vector<double> S(200, 0.0);
  const auto r = select_boundaries({{Stream::Global, cands({50, 120})}}, S,
                                   FusionConfig{});
  CHECK(r.boundaries.frames() == Frames{50, 120});
  REQUIRE(r.provenance.size() == 2);
  CHECK(r.provenance[0].accepted_by == Acceptance::SingleStream);
}

TEST_CASE("unanimous agreement forms one cluster") {
  std::vector<double> S(100, 0.0);
  S[50] = 1.0;
  const auto r = select_boundaries({{Stream::Global, cands({50})},
                                    {Stream::Interact, cands({50})},
                                    {Stream::Relation, cands({50})}},
                                   S, FusionConfig{});
  CHECK(r.boundaries.frames() == Frames{50});
  REQUIRE(r.provenance.size() == 1);
  CHECK(r.provenance[0].accepted_by == Acceptance::Cluster);
  CHECK(r.provenance[0].cluster_members.size() == 3);
}

TEST_CASE("cluster plus salient singleton") {
  std::vector<double> S(300, 0.0);
  S[47] = 0.6;
  S[50] = 0.9;
  S[53] = 0.7;
  S[200] = 2.0;
  const std::map<Stream, CandidateSet> in{{Stream::Global, cands({50})},
                                          {Stream::Interact, cands({53, 200})},
                                          {Stream::Relation, cands({47})}};
  const auto r = select_boundaries(in, S, FusionConfig{});
  CHECK(r.boundaries.frames() == Frames{50, 200});
  REQUIRE(r.provenance.size() == 2);
  CHECK(r.provenance[0].accepted_by == Acceptance::Cluster);
  CHECK(r.provenance[0].confidence == 0.9);
  CHECK(r.provenance[1].accepted_by == Acceptance::Salience);
  CHECK(oracle::select({{Stream::Global, {50}},
                        {Stream::Interact, {53, 200}},
                        {Stream::Relation, {47}}},
                       S, 10, 2.0) == Frames{50, 200});

  // 1.8 is not strictly above 2 * 0.9
  S[200] = 1.8;
  CHECK(select_boundaries(in, S, FusionConfig{}).boundaries.frames() == Frames{50});
}

TEST_CASE("no cluster falls back to the best single candidate") {
  std::vector<double> S(300, 0.0);
  S[40] = 1.0;
  S[150] = 3.0;
  S[250] = 7.0;
  const auto r = select_boundaries({{Stream::Global, cands({40, 150})},
                                    {Stream::Interact, cands({250})}},
                                   S, FusionConfig{});
  // 250 is the fallback, nothing beats 2 * 7
  CHECK(r.boundaries.frames() == Frames{250});
  CHECK(r.provenance[0].accepted_by == Acceptance::Fallback);
}

TEST_CASE("anchor is the first configured stream when global is absent") {
  std::vector<double> S(100, 1.0);
  const auto r = select_boundaries({{Stream::Interact, cands({20, 60})},
                                    {Stream::Relation, cands({22})}},
                                   S, FusionConfig{});
  CHECK(r.boundaries.frames() == Frames{20});
}

TEST_CASE("consumed neighbours cannot join a second cluster") {
  std::vector<double> S(100, 1.0);
  // interact 15 is nearest to both globals; the first claims it
  const auto r = select_boundaries({{Stream::Global, cands({10, 20})},
                                    {Stream::Interact, cands({15})}},
                                   S, FusionConfig{});
  CHECK(r.boundaries.frames() == Frames{10});
}

TEST_CASE("suppression keeps the higher score") {
  std::vector<double> S(200, 0.0);
  S[50] = 1.0;
  S[60] = 5.0;  // salient, within theta_n of 50
  const auto r = select_boundaries({{Stream::Global, cands({50})},
                                    {Stream::Interact, cands({50, 60})}},
                                   S, FusionConfig{});
  CHECK(r.boundaries.frames() == Frames{60});
}

TEST_CASE("invalid inputs") {
  std::vector<double> S(10, 0.0);
  CHECK_THROWS_AS(select_boundaries({}, S, FusionConfig{}), Error);
  FusionConfig bad;
  bad.salience_factor = 1.0;
  CHECK_THROWS_AS(bad.validate(), Error);
  bad = FusionConfig{};
  bad.beta_global = bad.beta_interact = bad.beta_relation = 0.0;
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("provenance JSON") {
  std::vector<double> S(100, 0.0);
  S[50] = 1.0;
  const auto r = select_boundaries({{Stream::Global, cands({50})},
                                    {Stream::Interact, cands({52})}},
                                   S, FusionConfig{});
  const auto j = nlohmann::json::parse(fusion_result_to_json(r));
  CHECK(j["boundaries"] == nlohmann::json::array({50}));
  CHECK(j["provenance"][0]["accepted_by"] == "cluster");
  CHECK(j["provenance"][0]["cluster_members"].size() == 2);
}

TEST_CASE("stream names") {
  for (Stream s : {Stream::Global, Stream::Interact, Stream::Relation})
    CHECK(parse_stream(stream_name(s)) == s);
  CHECK(!parse_stream("audio").has_value());
}

TEST_CASE("equal_split") {
  CHECK(equal_split(100, 4).frames() == Frames{25, 50, 75});
  CHECK(equal_split(10, 1).frames().empty());
  CHECK(equal_split(10, 3).frames() == Frames{3, 7});
  CHECK(equal_split(5, 5).frames() == Frames{1, 2, 3, 4});
  CHECK_THROWS_AS(equal_split(3, 4), Error);
  CHECK_THROWS_AS(equal_split(3, 0), Error);
}

TEST_CASE("property: agrees with the restated rule set") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto inst = random_instance(rng);
    FusionConfig cfg = raw_config(inst.theta);
    const auto got = select_boundaries(inst.cands, inst.scores, cfg);
    REQUIRE(got.boundaries.frames() ==
            oracle::select(inst.frames, inst.scores, inst.theta, 2.0));
  }
}

TEST_CASE("property: structural guarantees and determinism") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 500; ++trial) {
    const auto inst = random_instance(rng);
    const FusionConfig cfg = raw_config(inst.theta);
    const auto r = select_boundaries(inst.cands, inst.scores, cfg);
    CHECK(r == select_boundaries(inst.cands, inst.scores, cfg));
    const auto& f = r.boundaries.frames();
    REQUIRE(r.provenance.size() == f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
      CHECK(r.provenance[i].source_frame == f[i]);
      bool seen = false;
      for (const auto& [s, fs] : inst.frames)
        seen = seen || std::binary_search(fs.begin(), fs.end(), f[i]);
      CHECK(seen);
      if (i > 0 && inst.cands.size() > 1 && inst.theta > 0)
        CHECK(f[i] - f[i - 1] > inst.theta);
    }
  }
}

TEST_CASE("property: boundary frames invariant under uniform positive scaling") {
  std::mt19937_64 rng(33);
  std::uniform_real_distribution<double> factor(0.05, 20.0);
  std::uniform_int_distribution<std::size_t> len(40, 150), streams(1, 3);
  std::uniform_real_distribution<double> value(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = len(rng);
    std::map<Stream, DifferenceSeries> series;
    std::map<Stream, CandidateSet> c;
    const std::size_t k = streams(rng);
    for (std::size_t s = 0; s < k; ++s) {
      std::vector<double> v(n);
      for (auto& x : v) x = value(rng);
      series.emplace(Stream(s), interior(v));
    }
    const double a = factor(rng);
    for (auto normalize : {Normalize::None, Normalize::Max}) {
      FusionConfig cfg;
      cfg.normalize = normalize;
      std::map<Stream, DifferenceSeries> scaled;
      std::map<Stream, CandidateSet> c1, c2;
      for (const auto& [s, e] : series) {
        scaled.emplace(s, e.scaled(a));
        c1[s] = detect_candidates(e, 4);
        c2[s] = detect_candidates(scaled.at(s), 4);
      }
      const auto r1 = select_boundaries(c1, confidence_scores(series, cfg), cfg);
      const auto r2 = select_boundaries(c2, confidence_scores(scaled, cfg), cfg);
      CHECK(r1.boundaries == r2.boundaries);
    }
  }
}

TEST_CASE("property: identical streams reproduce the single-stream output") {
  std::mt19937_64 rng(34);
  std::uniform_int_distribution<std::size_t> len(40, 200);
  std::uniform_real_distribution<double> value(0.0, 1.0);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = len(rng);
    std::vector<double> v(n);
    for (auto& x : v) x = value(rng);
    const auto e = interior(v);
    FusionConfig cfg;
    cfg.theta_n = 5;  // candidates sit more than alpha = 6 apart
    const auto c = detect_candidates(e, 6);
    const auto single = select_boundaries(
        {{Stream::Global, c}}, confidence_scores({{Stream::Global, e}}, cfg), cfg);
    const std::map<Stream, DifferenceSeries> three{
        {Stream::Global, e}, {Stream::Interact, e}, {Stream::Relation, e}};
    const auto fused = select_boundaries(
        {{Stream::Global, c}, {Stream::Interact, c}, {Stream::Relation, c}},
        confidence_scores(three, cfg), cfg);
    CHECK(fused.boundaries == single.boundaries);
  }
}

TEST_CASE("detect_boundaries runs the whole chain") {
  std::vector<float> a(60, 0.0f);
  for (std::size_t i = 30; i < 60; ++i) a[i] = 1.0f;
  const FeatureSequence seq(60, 1, a);
  PipelineConfig cfg;
  const auto one = detect_boundaries({{Stream::Global, seq}}, cfg);
  CHECK(one.boundaries.frames() == Frames{30});
  const auto three = detect_boundaries(
      {{Stream::Global, seq}, {Stream::Interact, seq}, {Stream::Relation, seq}}, cfg);
  CHECK(three.boundaries.frames() == Frames{30});
  CHECK_THROWS_AS(detect_boundaries({{Stream::Global, seq},
                                     {Stream::Interact, FeatureSequence(59, 1, std::vector<float>(59))}},
                                    cfg),
                  Error);
}
