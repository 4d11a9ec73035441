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

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "tempseg/candidate_detect.hpp"
#include "tempseg/error.hpp"

using namespace tempseg;

namespace {

using Frames = std::vector<std::size_t>;

DifferenceSeries full_range(std::vector<double> v) {
  const std::size_t last = v.size() - 1;
  return DifferenceSeries(std::move(v), 1, 0, last);
}

// Values drawn from a small alphabet so plateaus and ties are common.
DifferenceSeries random_series(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> len(1, 60);
  std::uniform_int_distribution<int> level(0, 4);
  const std::size_t n = len(rng);
  std::uniform_int_distribution<std::size_t> edge(0, n / 3);
  const std::size_t lo = edge(rng);
  const std::size_t hi = n - 1 - edge(rng);
  std::vector<double> v(n, 0.0);
  for (std::size_t i = lo; i <= hi && lo <= hi; ++i) v[i] = level(rng);
  return DifferenceSeries(std::move(v), 1, lo, hi);
}

}  // namespace

TEST_CASE("examples") {
  CHECK(detect_candidates(full_range({0, 0, 2, 0, 0}), 1).frames() == Frames{2});
  CHECK(detect_candidates(full_range({0, 3, 3, 0}), 1).frames() == Frames{1});
  CHECK(detect_candidates(full_range({0, 5, 0, 0, 4, 0}), 2).frames() ==
        Frames{1, 4});
  CHECK(oracle::candidates(full_range({0, 5, 0, 0, 4, 0}), 2) == Frames{1, 4});
}

TEST_CASE("scores, tag, and alpha are carried") {
  const auto c = detect_candidates(full_range({0, 1, 7, 1, 0}), 3, "interact");
  REQUIRE(c.size() == 1);
  CHECK(c.entries[0] == Candidate{2, 7.0});
  CHECK(c.alpha == 3);
  CHECK(c.stream_id == "interact");
}

TEST_CASE("all-zero series and invalid alpha") {
  CHECK(detect_candidates(full_range(std::vector<double>(12, 0.0)), 3).size() == 0);
  CHECK_THROWS_AS(detect_candidates(full_range({1.0}), 0), Error);
}

TEST_CASE("frames outside the valid range never qualify") {
  // The larger value at index 1 sits outside [2, 5] and is ignored.
  const DifferenceSeries s({0, 0, 1, 2, 1, 0, 0}, 2, 2, 4);
  CHECK(detect_candidates(s, 5).frames() == Frames{3});
  const DifferenceSeries empty({0, 0, 0}, 2, 1, 0);
  CHECK(detect_candidates(empty, 1).size() == 0);
}

TEST_CASE("windows truncate at the valid-range edges") {
  const auto s = full_range({4, 0, 0, 0, 0, 0, 0, 0, 0, 3});
  CHECK(detect_candidates(s, 5).frames() == Frames{0, 9});
}

TEST_CASE("property: equals the brute-force window scan") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<std::size_t> alpha(1, 12);
  for (int trial = 0; trial < 500; ++trial) {
    const auto s = random_series(rng);
    const std::size_t a = alpha(rng);
    REQUIRE(detect_candidates(s, a).frames() == oracle::candidates(s, a));
  }
}

TEST_CASE("property: alpha-monotone thinning") {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<std::size_t> alpha(1, 20);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = random_series(rng);
    std::size_t a1 = alpha(rng), a2 = alpha(rng);
    if (a1 > a2) std::swap(a1, a2);
    const auto wide = detect_candidates(s, a2).frames();
    const auto narrow = detect_candidates(s, a1).frames();
    CHECK(std::includes(narrow.begin(), narrow.end(), wide.begin(), wide.end()));
  }
}

TEST_CASE("property: no candidate window holds a larger value; spacing > alpha") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> alpha(1, 10);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = random_series(rng);
    const std::size_t a = alpha(rng);
    const auto c = detect_candidates(s, a).frames();
    for (std::size_t i = 0; i < c.size(); ++i) {
      CHECK(s.in_range(c[i]));
      CHECK(s[c[i]] > 0.0);
      if (i > 0) CHECK(c[i] - c[i - 1] > a);
      for (std::size_t j = s.valid_first(); j <= s.valid_last(); ++j)
        if ((j > c[i] ? j - c[i] : c[i] - j) <= a) CHECK(s[j] <= s[c[i]]);
    }
  }
}

TEST_CASE("property: positive scaling leaves candidate frames unchanged") {
  std::mt19937_64 rng(24);
  std::uniform_real_distribution<double> factor(0.01, 100.0);
  std::uniform_int_distribution<std::size_t> alpha(1, 10);
  for (int trial = 0; trial < 300; ++trial) {
    const auto s = random_series(rng);
    const std::size_t a = alpha(rng);
    CHECK(detect_candidates(s.scaled(factor(rng)), a).frames() ==
          detect_candidates(s, a).frames());
  }
}
