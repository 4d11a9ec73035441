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

// Drives the installed tempseg executable end to end.

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include <sys/wait.h>

#include "temp_dir.hpp"

using testing_support::TempDir;
using testing_support::read_text;
using testing_support::write_text;
namespace fs = std::filesystem;

namespace {

int run(const std::string& args) {
  const std::string cmd =
      std::string(TEMPSEG_CLI_PATH) + " " + args + " >/dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string q(const fs::path& p) { return "'" + p.string() + "'"; }

std::vector<long> read_ints(const fs::path& p) {
  std::vector<long> out;
  std::istringstream in(read_text(p));
  long v;
  while (in >> v) out.push_back(v);
  return out;
}

nlohmann::json read_json(const fs::path& p) {
  return nlohmann::json::parse(read_text(p));
}

}  // namespace

TEST_CASE("baseline equal-split writes boundaries and a manifest") {
  TempDir dir;
  const auto out = dir / "e.bounds";
  REQUIRE(run("baseline equal-split --frames 100 --segments 4 --out " + q(out)) == 0);
  CHECK(read_ints(out) == std::vector<long>{25, 50, 75});
  const auto m = read_json(dir / "e.bounds.manifest.json");
  CHECK(m["command"] == "baseline equal-split");
  CHECK(m["config"]["segments"] == 4);
  CHECK(m.contains("timestamp"));
  CHECK(m.contains("version"));

  write_text(dir / "gt.labels", "a\na\nb\nb\nb\nc\nc\nc\nc\nc\n");
  REQUIRE(run("baseline equal-split --gt " + q(dir / "gt.labels") + " --out " +
              q(dir / "g.bounds")) == 0);
  CHECK(read_ints(dir / "g.bounds") == std::vector<long>{3, 7});
  const auto mg = read_json(dir / "g.bounds.manifest.json");
  CHECK(mg["inputs"][0]["sha256"].get<std::string>().size() == 64);
}

TEST_CASE("diff on the step fixture") {
  TempDir dir;
  write_text(dir / "step.csv", "0\n0\n0\n0\n0\n1\n1\n1\n1\n1\n");
  REQUIRE(run("diff --features " + q(dir / "step.csv") + " --k 2 --out " +
              q(dir / "d.csv") + " --alpha 2 --candidates-out " + q(dir / "c.csv")) == 0);
  CHECK(read_text(dir / "d.csv") ==
        "index,value\n0,0\n1,0\n2,0\n3,0\n4,1\n5,2\n6,1\n7,0\n8,0\n9,0\n");
  CHECK(read_text(dir / "c.csv") == "frame,score\n5,2\n");
}

TEST_CASE("graph reproduces the edge sets") {
  TempDir dir;
  write_text(dir / "pairs.csv", "knife,fork,45\ncup,bench,12\n");
  write_text(dir / "dets.json", R"([
    {"frame":0,"objects":[{"class":"knife","score":0.9,"bbox":[0,0,10,10]},
                          {"class":"fork","score":0.9,"bbox":[50,0,60,10]}]},
    {"frame":1,"objects":[{"class":"knife","score":0.9,"bbox":[0,0,10,10]},
                          {"class":"fork","score":0.9,"bbox":[110,0,120,10]}]},
    {"frame":2,"objects":[{"class":"cup","score":0.9,"bbox":[0,0,10,10]},
                          {"class":"bench","score":0.9,"bbox":[5,5,15,15]}]}])");
  REQUIRE(run("graph --detections " + q(dir / "dets.json") + " --pairs " +
              q(dir / "pairs.csv") + " --out " + q(dir / "g.json") + " --table-out " +
              q(dir / "t.json")) == 0);
  const auto g = read_json(dir / "g.json");
  REQUIRE(g.size() == 3);
  CHECK(g[0]["edges"] == nlohmann::json::parse("[[0,1]]"));
  CHECK(g[1]["edges"].empty());
  CHECK(g[2]["edges"].empty());
  CHECK(read_json(dir / "t.json") == nlohmann::json::parse(R"({"fork":["knife"],"knife":["fork"]})"));

  CHECK(run("graph --detections " + q(dir / "dets.json") + " --out " +
            q(dir / "h.json")) != 0);
  CHECK(!fs::exists(dir / "h.json"));
}

TEST_CASE("failures leave no output behind") {
  TempDir dir;
  CHECK(run("detect --global " + q(dir / "missing.otfs") + " --out " +
            q(dir / "x.bounds") + " --provenance " + q(dir / "x.json")) != 0);
  CHECK(fs::is_empty(dir.path()));

  // The second stream is shorter: loading succeeds, fusion fails.
  REQUIRE(run("synth --out-prefix " + q(dir / "a") + " --frames 500") == 0);
  REQUIRE(run("synth --out-prefix " + q(dir / "b") + " --frames 400") == 0);
  const auto before = std::distance(fs::directory_iterator(dir.path()), {});
  CHECK(run("detect --global " + q(dir / "a.otfs") + " --interact " +
            q(dir / "b.otfs") + " --out " + q(dir / "x.bounds")) != 0);
  CHECK(std::distance(fs::directory_iterator(dir.path()), {}) == before);

  CHECK(run("baseline equal-split --frames 3 --segments 4 --out " + q(dir / "e")) != 0);
  CHECK(!fs::exists(dir / "e"));
  CHECK(run("detect --out " + q(dir / "y")) != 0);
  CHECK(run("synth --out-prefix " + q(dir / "z") + " --streams 2") != 0);
}

TEST_CASE("noise-free single stream recovers the planted set") {
  TempDir dir;
  REQUIRE(run("synth --out-prefix " + q(dir / "v") + " --sigma 0 --seed 7") == 0);
  REQUIRE(run("detect --global " + q(dir / "v.otfs") + " --out " + q(dir / "p.bounds")) == 0);
  CHECK(read_ints(dir / "p.bounds") == read_ints(dir / "v.bounds"));
}

TEST_CASE("synth is deterministic") {
  TempDir dir;
  REQUIRE(run("synth --out-prefix " + q(dir / "a") + " --seed 3 --streams 3") == 0);
  REQUIRE(run("synth --out-prefix " + q(dir / "b") + " --seed 3 --streams 3") == 0);
  for (const char* s : {"global", "interact", "relation"})
    CHECK(testing_support::read_bytes(dir / ("a." + std::string(s) + ".otfs")) ==
          testing_support::read_bytes(dir / ("b." + std::string(s) + ".otfs")));
  CHECK(read_text(dir / "a.labels") == read_text(dir / "b.labels"));
}

TEST_CASE("smaller alpha never yields fewer boundaries") {
  TempDir dir;
  REQUIRE(run("synth --out-prefix " + q(dir / "n") + " --sigma 0.15 --seed 11") == 0);
  std::vector<std::size_t> counts;
  for (int alpha : {8, 15, 25}) {
    const auto out = dir / ("a" + std::to_string(alpha) + ".bounds");
    REQUIRE(run("detect --global " + q(dir / "n.otfs") + " --alpha " +
                std::to_string(alpha) + " --out " + q(out)) == 0);
    counts.push_back(read_ints(out).size());
  }
  CHECK(counts[0] >= counts[1]);
  CHECK(counts[1] >= counts[2]);
  CHECK(counts[0] > counts[2]);
}

TEST_CASE("three streams with spurious bumps fuse to the planted set") {
  TempDir dir;
  REQUIRE(run("synth --out-prefix " + q(dir / "m") +
              " --streams 3 --sigma 0 --seed 42 --spurious-height 0.5"
              " --spurious-interact 20 --spurious-relation 480") == 0);
  REQUIRE(run("detect --global " + q(dir / "m.global.otfs") + " --interact " +
              q(dir / "m.interact.otfs") + " --relation " + q(dir / "m.relation.otfs") +
              " --out " + q(dir / "f.bounds") + " --provenance " + q(dir / "f.json")) == 0);
  CHECK(read_ints(dir / "f.bounds") == read_ints(dir / "m.bounds"));
  const auto prov = read_json(dir / "f.json");
  for (const auto& r : prov["provenance"]) CHECK(r["accepted_by"] == "cluster");
}

TEST_CASE("eval reports") {
  TempDir dir;
  const auto gt = dir / "gt", pred = dir / "pred";
  fs::create_directories(gt);
  fs::create_directories(pred);
  write_text(gt / "v1.labels", "a\na\na\nb\nb\nb\nc\nc\nc\nc\n");
  write_text(pred / "v1.bounds", "3\n6\n");
  write_text(gt / "v2.labels", "x\nx\nx\nx\nx\ny\ny\ny\ny\ny\n");
  write_text(pred / "v2.bounds", "5\n");

  SUBCASE("prediction equal to ground truth scores one") {
    REQUIRE(run("eval --pred-dir " + q(pred) + " --gt-dir " + q(gt) + " --out " +
                q(dir / "r.json") + " --csv " + q(dir / "r.csv")) == 0);
    const auto r = read_json(dir / "r.json");
    CHECK(r["summary"]["videos"] == 2);
    CHECK(r["summary"]["f1_small"] == 1.0);
    CHECK(r["summary"]["f1_large"] == 1.0);
    CHECK(r["summary"]["mof"] == 1.0);
    CHECK(r["videos"][0]["video"] == "v1");
    const auto csv = read_text(dir / "r.csv");
    CHECK(csv.rfind("video,num_frames,", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 3);
  }
  SUBCASE("a perfect and an empty prediction average to one half") {
    write_text(pred / "v2.bounds", "");
    REQUIRE(run("eval --pred-dir " + q(pred) + " --gt-dir " + q(gt) + " --out " +
                q(dir / "r.json")) == 0);
    CHECK(read_json(dir / "r.json")["summary"]["f1_small"] == 0.5);
  }
  SUBCASE("thresholds for a 446 s video") {
    std::string labels;
    for (int i = 0; i < 2230; ++i) labels += i < 1000 ? "a\n" : "b\n";
    write_text(dir / "long.labels", labels);
    write_text(dir / "long.bounds", "1000\n");
    REQUIRE(run("eval --pred " + q(dir / "long.bounds") + " --gt " +
                q(dir / "long.labels") + " --threshold-frames 3 --out " +
                q(dir / "l.json")) == 0);
    const auto v = read_json(dir / "l.json")["videos"][0];
    CHECK(v["f1_small"]["threshold_frames"] == 10);
    const int large = v["f1_large"]["threshold_frames"];
    CHECK(large >= 111);
    CHECK(large <= 112);
    CHECK(v["f1_fixed"]["threshold_frames"] == 3);
  }
  SUBCASE("unpaired video is an error") {
    fs::remove(pred / "v2.bounds");
    CHECK(run("eval --pred-dir " + q(pred) + " --gt-dir " + q(gt) + " --out " +
              q(dir / "r.json")) != 0);
    CHECK(!fs::exists(dir / "r.json"));
  }
}
