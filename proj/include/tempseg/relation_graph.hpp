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

#ifndef TEMPSEG_RELATION_GRAPH_HPP
#define TEMPSEG_RELATION_GRAPH_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tempseg {

struct Box {
  double x1, y1, x2, y2;
};

struct DetectedObject {
  std::string cls;
  double score;
  Box bbox;
};

struct DetectionFrame {
  std::int64_t frame = 0;
  std::vector<DetectedObject> objects;

  /// Scores in [0, 1], x1 < x2 and y1 < y2 for every box.
  void validate() const;
};

/// Class tokens are compared after trimming and lowercasing.
std::string normalize_class(std::string_view token);

/// Symmetric class -> related-classes map.
class RelationTable {
 public:
  RelationTable() = default;

  /// Inserts a <-> b.
  void add(std::string_view a, std::string_view b);
  bool related(std::string_view a, std::string_view b) const;
  const std::map<std::string, std::set<std::string>>& relations() const {
    return relations_;
  }
  bool empty() const { return relations_.empty(); }

  friend bool operator==(const RelationTable&, const RelationTable&) = default;

 private:
  std::map<std::string, std::set<std::string>> relations_;
};

struct PairCount {
  std::string a;
  std::string b;
  std::int64_t count;
};

inline constexpr std::int64_t kDefaultMinPairCount = 30;
inline constexpr double kDefaultThetaR = 80.0;
inline constexpr double kDefaultMinScore = 0.7;

/// Keeps an unordered pair when its summed count over both orders reaches
/// min_count.
RelationTable build_table(const std::vector<PairCount>& pair_counts,
                          std::int64_t min_count = kDefaultMinPairCount);

enum class BoxMetric {
  Gap,     // shortest distance between the rectangles, 0 if they intersect
  Center,  // distance between box centres
};

double box_gap(const Box& a, const Box& b);
double box_distance(const Box& a, const Box& b, BoxMetric metric);

struct RelationGraph {
  std::int64_t frame = 0;
  /// Indices into DetectionFrame::objects.
  std::vector<std::size_t> nodes;
  /// Unordered pairs stored as (smaller, larger) object indices, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Nodes are objects scoring at least min_score; p and q are joined when
/// their classes are related in the table and their boxes are within
/// theta_r.
RelationGraph build_graph(const DetectionFrame& dets, const RelationTable& table,
                          double theta_r = kDefaultThetaR,
                          double min_score = kDefaultMinScore,
                          BoxMetric metric = BoxMetric::Gap);

// JSON interchange.
//   detections: [{"frame":i,"objects":[{"class":..,"score":..,"bbox":[x1,y1,x2,y2]}]}]
//   table:      {"class":["other", ...], ...}   (symmetrised on load)
//   graph:      {"frame":i,"nodes":[...],"edges":[[p,q],...]}
std::vector<DetectionFrame> parse_detections_json(std::string_view text);
RelationTable parse_table_json(std::string_view text);
std::string table_to_json(const RelationTable& table);
std::string graphs_to_json(const std::vector<RelationGraph>& graphs);

/// Pair-count CSV: "classA,classB,count" per line.
std::vector<PairCount> parse_pair_counts_csv(std::string_view text);

}  // namespace tempseg

#endif
