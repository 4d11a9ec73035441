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

#include "tempseg/relation_graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <json.hpp>

#include "tempseg/error.hpp"

namespace tempseg {

namespace {

using json = nlohmann::json;

bool finite_box(const Box& b) {
  return std::isfinite(b.x1) && std::isfinite(b.y1) && std::isfinite(b.x2) &&
         std::isfinite(b.y2);
}

std::string_view trim_view(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(ErrorCode::Format, std::string(what) + ": " + e.what());
  }
}

}  // namespace

void DetectionFrame::validate() const {
  for (std::size_t i = 0; i < objects.size(); ++i) {
    const auto& o = objects[i];
    const std::string where =
        "frame " + std::to_string(frame) + " object " + std::to_string(i);
    require(!normalize_class(o.cls).empty(), where + ": empty class");
    require(std::isfinite(o.score) && o.score >= 0.0 && o.score <= 1.0,
            where + ": score must lie in [0, 1]");
    require(finite_box(o.bbox) && o.bbox.x1 < o.bbox.x2 &&
                o.bbox.y1 < o.bbox.y2,
            where + ": bbox needs x1 < x2 and y1 < y2");
  }
}

std::string normalize_class(std::string_view token) {
  std::string out(trim_view(token));
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  return out;
}

void RelationTable::add(std::string_view a, std::string_view b) {
  auto na = normalize_class(a);
  auto nb = normalize_class(b);
  require(!na.empty() && !nb.empty(), "relation classes must be non-empty");
  relations_[na].insert(nb);
  relations_[nb].insert(na);
}

bool RelationTable::related(std::string_view a, std::string_view b) const {
  const auto it = relations_.find(normalize_class(a));
  return it != relations_.end() && it->second.count(normalize_class(b)) > 0;
}

RelationTable build_table(const std::vector<PairCount>& pair_counts,
                          std::int64_t min_count) {
  std::map<std::pair<std::string, std::string>, std::int64_t> merged;
  for (const auto& p : pair_counts) {
    require(p.count >= 0, "pair counts must be non-negative");
    auto a = normalize_class(p.a);
    auto b = normalize_class(p.b);
    require(!a.empty() && !b.empty(), "pair classes must be non-empty");
    if (b < a) std::swap(a, b);
    merged[{std::move(a), std::move(b)}] += p.count;
  }
  RelationTable table;
  for (const auto& [pair, count] : merged)
    if (count >= min_count) table.add(pair.first, pair.second);
  return table;
}

double box_gap(const Box& a, const Box& b) {
  const double dx = std::max({0.0, b.x1 - a.x2, a.x1 - b.x2});
  const double dy = std::max({0.0, b.y1 - a.y2, a.y1 - b.y2});
  return std::hypot(dx, dy);
}

double box_distance(const Box& a, const Box& b, BoxMetric metric) {
  if (metric == BoxMetric::Gap) return box_gap(a, b);
  const double dx = 0.5 * (a.x1 + a.x2) - 0.5 * (b.x1 + b.x2);
  const double dy = 0.5 * (a.y1 + a.y2) - 0.5 * (b.y1 + b.y2);
  return std::hypot(dx, dy);
}

RelationGraph build_graph(const DetectionFrame& dets, const RelationTable& table,
                          double theta_r, double min_score, BoxMetric metric) {
  require(std::isfinite(theta_r) && theta_r >= 0.0,
          "theta_r must be finite and non-negative");
  dets.validate();
  RelationGraph g;
  g.frame = dets.frame;
  for (std::size_t i = 0; i < dets.objects.size(); ++i)
    if (dets.objects[i].score >= min_score) g.nodes.push_back(i);

  for (std::size_t a = 0; a < g.nodes.size(); ++a) {
    const auto& p = dets.objects[g.nodes[a]];
    for (std::size_t b = a + 1; b < g.nodes.size(); ++b) {
      const auto& q = dets.objects[g.nodes[b]];
      if (!table.related(p.cls, q.cls)) continue;
      if (box_distance(p.bbox, q.bbox, metric) <= theta_r)
        g.edges.emplace_back(g.nodes[a], g.nodes[b]);
    }
  }
  return g;
}

std::vector<DetectionFrame> parse_detections_json(std::string_view text) {
  const json doc = parse_json(text, "detections");
  if (!doc.is_array())
    fail(ErrorCode::Format, "detections: expected a JSON array of frames");
  std::vector<DetectionFrame> frames;
  try {
    for (const auto& jf : doc) {
      DetectionFrame f;
      f.frame = jf.at("frame").get<std::int64_t>();
      for (const auto& jo : jf.at("objects")) {
        const auto& bb = jo.at("bbox");
        if (!bb.is_array() || bb.size() != 4)
          fail(ErrorCode::Format, "detections: bbox must be [x1,y1,x2,y2]");
        f.objects.push_back({jo.at("class").get<std::string>(),
                             jo.at("score").get<double>(),
                             {bb[0].get<double>(), bb[1].get<double>(),
                              bb[2].get<double>(), bb[3].get<double>()}});
      }
      f.validate();
      frames.push_back(std::move(f));
    }
  } catch (const json::exception& e) {
    fail(ErrorCode::Format, std::string("detections: ") + e.what());
  }
  return frames;
}

RelationTable parse_table_json(std::string_view text) {
  const json doc = parse_json(text, "relation table");
  if (!doc.is_object())
    fail(ErrorCode::Format, "relation table: expected a JSON object");
  RelationTable table;
  try {
    for (const auto& [cls, related] : doc.items()) {
      if (!related.is_array())
        fail(ErrorCode::Format,
             "relation table: entry '" + cls + "' must be an array");
      for (const auto& other : related)
        table.add(cls, other.get<std::string>());
    }
  } catch (const json::exception& e) {
    fail(ErrorCode::Format, std::string("relation table: ") + e.what());
  }
  return table;
}

std::string table_to_json(const RelationTable& table) {
  json doc = json::object();
  for (const auto& [cls, related] : table.relations())
    doc[cls] = std::vector<std::string>(related.begin(), related.end());
  return doc.dump(2);
}

std::string graphs_to_json(const std::vector<RelationGraph>& graphs) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& g : graphs) {
    nlohmann::ordered_json jg;
    jg["frame"] = g.frame;
    jg["nodes"] = g.nodes;
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [p, q] : g.edges) edges.push_back({p, q});
    jg["edges"] = std::move(edges);
    doc.push_back(std::move(jg));
  }
  return doc.dump(2);
}

std::vector<PairCount> parse_pair_counts_csv(std::string_view text) {
  std::vector<PairCount> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    const std::string_view line = trim_view(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty()) continue;
    const auto c1 = line.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : line.find(',', c1 + 1);
    if (c2 == std::string_view::npos)
      fail(ErrorCode::Format, "pair counts line " + std::to_string(line_no) +
                                  ": expected classA,classB,count");
    const auto count_text = trim_view(line.substr(c2 + 1));
    std::int64_t count = 0;
    const auto res = std::from_chars(
        count_text.data(), count_text.data() + count_text.size(), count);
    if (res.ec != std::errc() || res.ptr != count_text.data() + count_text.size())
      fail(ErrorCode::Format, "pair counts line " + std::to_string(line_no) +
                                  ": bad count '" + std::string(count_text) +
                                  "'");
    out.push_back({std::string(trim_view(line.substr(0, c1))),
                   std::string(trim_view(line.substr(c1 + 1, c2 - c1 - 1))),
                   count});
  }
  return out;
}

}  // namespace tempseg
