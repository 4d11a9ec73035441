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

#include "tempseg/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "tempseg/error.hpp"

namespace tempseg {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<double> random_unit(Rng& rng, std::size_t dim) {
  std::vector<double> u(dim);
  double norm = 0.0;
  while (norm < 1e-12) {
    norm = 0.0;
    for (auto& x : u) {
      x = rng.normal();
      norm += x * x;
    }
  }
  norm = std::sqrt(norm);
  for (auto& x : u) x /= norm;
  return u;
}

}  // namespace

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

std::uint64_t Rng::uniform_int(std::uint64_t lo, std::uint64_t hi) {
  require(lo <= hi, "uniform_int needs lo <= hi");
  const std::uint64_t span = hi - lo;
  if (span == ~std::uint64_t{0}) return engine_();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + x % range;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u1;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

void SynthSpec::validate() const {
  require(num_frames >= 1, "synthetic spec needs num_frames >= 1");
  require(dim >= 1, "synthetic spec needs dim >= 1");
  require(num_segments >= 1, "synthetic spec needs num_segments >= 1");
  require(min_segment_len >= 1, "synthetic spec needs min_segment_len >= 1");
  require(num_segments <= num_frames / min_segment_len,
          "infeasible synthetic spec: " + std::to_string(num_segments) +
              " segments of at least " + std::to_string(min_segment_len) +
              " frames do not fit in " + std::to_string(num_frames));
  require(std::isfinite(mean_separation) && mean_separation > 0.0,
          "mean_separation must be positive");
  require(std::isfinite(noise_sigma) && noise_sigma >= 0.0,
          "noise_sigma must be non-negative");
  require(fps.num > 0 && fps.den > 0, "fps must be positive");
}

std::vector<std::size_t> segment_lengths(const SynthSpec& spec) {
  spec.validate();
  Rng layout(spec.seed);
  const std::size_t slack =
      spec.num_frames - spec.num_segments * spec.min_segment_len;
  std::vector<std::size_t> cuts;
  for (std::size_t i = 0; i + 1 < spec.num_segments; ++i)
    cuts.push_back(static_cast<std::size_t>(layout.uniform_int(0, slack)));
  std::sort(cuts.begin(), cuts.end());
  std::vector<std::size_t> lengths;
  std::size_t prev = 0;
  for (std::size_t c : cuts) {
    lengths.push_back(spec.min_segment_len + (c - prev));
    prev = c;
  }
  lengths.push_back(spec.min_segment_len + (slack - prev));
  return lengths;
}

MultiStreamResult generate_streams(const SynthSpec& spec,
                                   std::span<const StreamOptions> streams) {
  require(!streams.empty(), "at least one stream must be generated");
  const auto lengths = segment_lengths(spec);
  const std::size_t n = spec.num_frames;
  const std::size_t dim = spec.dim;

  std::vector<std::string> labels;
  std::vector<std::size_t> bounds;
  labels.reserve(n);
  for (std::size_t m = 0; m < lengths.size(); ++m) {
    if (m > 0) bounds.push_back(labels.size());
    labels.insert(labels.end(), lengths[m], "seg" + std::to_string(m));
  }

  MultiStreamResult out{{}, Segmentation(std::move(labels)),
                        BoundarySet(n, std::move(bounds))};

  for (std::size_t s = 0; s < streams.size(); ++s) {
    const StreamOptions& opt = streams[s];
    require(std::isfinite(opt.spurious_height) && opt.spurious_height >= 0.0,
            "spurious height must be non-negative");
    for (std::size_t f : opt.spurious_frames)
      if (f >= n)
        fail(ErrorCode::OutOfRange,
             "spurious frame " + std::to_string(f) + " beyond sequence end");

    Rng rng(splitmix64(spec.seed + s + 1));
    std::vector<double> mean(dim);
    for (auto& x : mean) x = rng.normal();

    std::vector<float> data;
    data.reserve(n * dim);
    for (std::size_t m = 0; m < lengths.size(); ++m) {
      if (m > 0) {
        const auto u = random_unit(rng, dim);
        const double step = spec.mean_separation * (1.0 + rng.uniform());
        for (std::size_t d = 0; d < dim; ++d) mean[d] += step * u[d];
      }
      for (std::size_t t = 0; t < lengths[m]; ++t)
        for (std::size_t d = 0; d < dim; ++d)
          data.push_back(
              static_cast<float>(mean[d] + spec.noise_sigma * rng.normal()));
    }

    for (std::size_t f : opt.spurious_frames) {
      const auto u = random_unit(rng, dim);
      for (std::size_t d = 0; d < dim; ++d)
        data[f * dim + d] = static_cast<float>(
            static_cast<double>(data[f * dim + d]) + opt.spurious_height * u[d]);
    }

    out.streams.emplace_back(n, dim, std::move(data), spec.fps);
  }
  return out;
}

SynthResult generate(const SynthSpec& spec) {
  const StreamOptions plain;
  auto multi = generate_streams(spec, std::span(&plain, 1));
  return SynthResult{std::move(multi.streams.front()), std::move(multi.labels),
                     std::move(multi.boundaries)};
}

}  // namespace tempseg
