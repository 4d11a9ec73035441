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

#include "oracles.hpp"
#include "tempseg/error.hpp"
#include "tempseg/temporal_diff.hpp"

using namespace tempseg;

namespace {

FeatureSequence random_sequence(std::mt19937_64& rng, std::size_t n,
                                std::size_t d) {
  std::uniform_real_distribution<float> u(-1.0f, 1.0f);
  std::vector<float> data(n * d);
  for (auto& v : data) v = u(rng);
  return FeatureSequence(n, d, std::move(data));
}

// Multiples of 1/256 in [-1, 1]: shifts by other small multiples of 1/256 are
// exact in float.
FeatureSequence dyadic_sequence(std::mt19937_64& rng, std::size_t n,
                                std::size_t d) {
  std::uniform_int_distribution<int> u(-256, 256);
  std::vector<float> data(n * d);
  for (auto& v : data) v = float(u(rng)) / 256.0f;
  return FeatureSequence(n, d, std::move(data));
}

}  // namespace

TEST_CASE("step function, K=2") {
  const FeatureSequence seq(10, 1, {0, 0, 0, 0, 0, 1, 1, 1, 1, 1});
  const auto eps = compute_difference(seq, 2);
  CHECK(eps.valid_first() == 2);
  CHECK(eps.valid_last() == 8);
  const std::vector<double> expected{0, 0, 0, 0, 1, 2, 1, 0, 0, 0};
  CHECK(eps.values() == expected);
  CHECK(oracle::difference(seq, 2) == expected);
}

TEST_CASE("constant sequence gives an all-zero series") {
  for (std::size_t k : {1u, 3u, 7u}) {
    const FeatureSequence seq(20, 4, std::vector<float>(80, 3.25f));
    const auto eps = compute_difference(seq, k);
    for (double v : eps.values()) CHECK(v == 0.0);
  }
}

TEST_CASE("short sequences have no valid index") {
  const FeatureSequence seq(5, 1, {0, 1, 2, 3, 4});
  const auto eps = compute_difference(seq, 3);
  CHECK(!eps.has_valid_range());
  for (double v : eps.values()) CHECK(v == 0.0);
  // L == 2K has exactly one valid index
  const auto edge = compute_difference(FeatureSequence(6, 1, {0, 0, 0, 1, 1, 1}), 3);
  CHECK(edge.valid_first() == 3);
  CHECK(edge.valid_last() == 3);
  CHECK(edge[3] == 3.0);
}

TEST_CASE("k < 1 is rejected") {
  CHECK_THROWS_AS(compute_difference(FeatureSequence(4, 1, {0, 1, 2, 3}), 0), Error);
}

TEST_CASE("DifferenceSeries invariants") {
  CHECK_THROWS_AS(DifferenceSeries({0, -1, 0}, 1, 0, 2), Error);
  CHECK_THROWS_AS(DifferenceSeries({1, 0, 0}, 1, 1, 2), Error);  // outside range
  CHECK_THROWS_AS(DifferenceSeries({0, 0}, 1, 0, 5), Error);
  CHECK(DifferenceSeries({0, 4, 2}, 1, 0, 2).max_value() == 4.0);
}

TEST_CASE("property: matches the window-sum oracle") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> len(1, 50), dim(1, 6), kd(1, 8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto seq = random_sequence(rng, len(rng), dim(rng));
    const std::size_t k = kd(rng);
    const auto eps = compute_difference(seq, k);
    const auto ref = oracle::difference(seq, k);
    for (std::size_t i = 0; i < ref.size(); ++i)
      CHECK(eps[i] == doctest::Approx(ref[i]).epsilon(1e-12));
  }
}

TEST_CASE("property: shift invariance is exact on dyadic data") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> len(2, 60), dim(1, 8), kd(1, 6);
  std::uniform_int_distribution<int> shift(-512, 512);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = len(rng), d = dim(rng), k = kd(rng);
    const auto seq = dyadic_sequence(rng, n, d);
    std::vector<float> c(d);
    for (auto& v : c) v = float(shift(rng)) / 256.0f;
    std::vector<float> shifted(seq.data().begin(), seq.data().end());
    for (std::size_t i = 0; i < shifted.size(); ++i) shifted[i] += c[i % d];
    const auto a = compute_difference(seq, k);
    const auto b = compute_difference(FeatureSequence(n, d, shifted), k);
    CHECK(a.values() == b.values());
  }
}

TEST_CASE("property: scaling by s multiplies by s^2") {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::size_t> len(2, 60), dim(1, 8), kd(1, 6);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = len(rng), d = dim(rng), k = kd(rng);
    const auto seq = random_sequence(rng, n, d);
    const double s = scale(rng);
    std::vector<float> scaled(seq.data().begin(), seq.data().end());
    for (auto& v : scaled) v = float(v * s);
    const auto a = compute_difference(seq, k);
    const auto b = compute_difference(FeatureSequence(n, d, scaled), k);
    for (std::size_t i = 0; i < n; ++i)
      CHECK(b[i] == doctest::Approx(s * s * a[i]).epsilon(1e-6));
  }
}

TEST_CASE("property: time reversal mirrors the valid part") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<std::size_t> len(2, 60), dim(1, 8), kd(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = len(rng), d = dim(rng), k = kd(rng);
    const auto seq = random_sequence(rng, n, d);
    std::vector<float> rev(n * d);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < d; ++j)
        rev[i * d + j] = seq.frame(n - 1 - i)[j];
    const auto a = compute_difference(seq, k);
    const auto b = compute_difference(FeatureSequence(n, d, rev), k);
    if (!a.has_valid_range()) continue;
    for (std::size_t i = a.valid_first(); i <= a.valid_last(); ++i)
      CHECK(b[i] == doctest::Approx(a[n - i]).epsilon(1e-12));
  }
}

TEST_CASE("property: zero exactly where past and future windows coincide") {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<std::size_t> len(2, 60), dim(1, 8), kd(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = len(rng), d = dim(rng), k = kd(rng);
    const auto seq = random_sequence(rng, n, d);
    const auto a = compute_difference(seq, k);
    for (double v : a.values()) CHECK(v >= 0.0);
    // Two flat halves: windows coincide everywhere except across the step.
    std::vector<float> flat(n * d);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < d; ++j)
        flat[i * d + j] = seq.frame(i < n / 2 ? 0 : n - 1)[j];
    const FeatureSequence two(n, d, flat);
    const auto b = compute_difference(two, k);
    if (!b.has_valid_range()) continue;
    for (std::size_t i = b.valid_first(); i <= b.valid_last(); ++i) {
      bool same = true;
      for (std::size_t j = 0; j < k && same; ++j)
        for (std::size_t x = 0; x < d; ++x)
          if (two.frame(i - k + j)[x] != two.frame(i + j)[x]) same = false;
      CHECK((b[i] == 0.0) == same);
    }
  }
}
