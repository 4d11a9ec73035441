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

#ifndef TEMPSEG_SYNTHETIC_HPP
#define TEMPSEG_SYNTHETIC_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "tempseg/feature_store.hpp"

namespace tempseg {

/// Identity of the random generator and the sampling procedure below.
/// Recorded next to generated fixtures.
inline constexpr std::string_view kGeneratorId =
    "mt19937_64/uniform53/box-muller/v1";

/// Portable sampler on top of std::mt19937_64. The engine's output is fixed
/// by the standard; the conversions here are too, unlike std::*_distribution.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform();
  /// Uniform integer in [lo, hi], rejection sampled.
  std::uint64_t uniform_int(std::uint64_t lo, std::uint64_t hi);
  /// Standard normal via the Box-Muller transform.
  double normal();

 private:
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

struct SynthSpec {
  std::size_t num_frames = 500;
  std::size_t dim = 32;
  std::size_t num_segments = 6;
  std::size_t min_segment_len = 40;
  double noise_sigma = 0.05;
  double mean_separation = 1.0;
  std::uint64_t seed = 42;
  FrameRate fps = kDefaultFrameRate;

  void validate() const;
};

struct SynthResult {
  FeatureSequence features;
  Segmentation labels;
  BoundarySet boundaries;
};

/// Per-stream options for correlated multi-stream synthesis.
struct StreamOptions {
  /// Frames that receive a one-frame displacement of spurious_height along a
  /// random unit direction. The resulting difference plateau spans
  /// [f - k + 1, f + k] with value spurious_height^2, so a pipeline with
  /// window k sees a candidate at f - k + 1.
  std::vector<std::size_t> spurious_frames;
  double spurious_height = 0.0;
};

struct MultiStreamResult {
  std::vector<FeatureSequence> streams;
  Segmentation labels;
  BoundarySet boundaries;
};

/// Procedure, all draws from Rng:
///  1. layout rng = Rng(seed): M-1 cut points uniform in [0, L - M*min_len],
///     sorted; segment m gets min_len plus the m-th gap.
///  2. stream s uses Rng(splitmix64(seed + s + 1)). First mean ~ N(0, I);
///     each next mean = previous + u * sep * (1 + U[0,1)) with u a uniform
///     random unit vector, so consecutive means are >= sep apart.
///  3. frame = mean + sigma * N(0, I), stored as float.
///  4. spurious bumps added per StreamOptions.
SynthResult generate(const SynthSpec& spec);

MultiStreamResult generate_streams(const SynthSpec& spec,
                                   std::span<const StreamOptions> streams);

/// Planted segment lengths only (step 1 above).
std::vector<std::size_t> segment_lengths(const SynthSpec& spec);

}  // namespace tempseg

#endif
