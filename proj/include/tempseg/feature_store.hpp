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

#ifndef TEMPSEG_FEATURE_STORE_HPP
#define TEMPSEG_FEATURE_STORE_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tempseg {

/// Frames per second as an exact rational.
struct FrameRate {
  std::uint32_t num = 5;
  std::uint32_t den = 1;

  double value() const { return static_cast<double>(num) / den; }
  friend bool operator==(const FrameRate&, const FrameRate&) = default;
};

inline constexpr FrameRate kDefaultFrameRate{5, 1};

/// L x D matrix of per-frame feature vectors, frame-major, 32-bit floats.
///
/// The frame rate is optional so that a file without one round-trips
/// byte-for-byte; effective_fps() falls back to 5 fps.
class FeatureSequence {
 public:
  FeatureSequence(std::size_t num_frames, std::size_t dim,
                  std::vector<float> data,
                  std::optional<FrameRate> fps = std::nullopt);

  std::size_t num_frames() const { return num_frames_; }
  std::size_t dim() const { return dim_; }
  std::span<const float> data() const { return data_; }
  std::span<const float> frame(std::size_t i) const {
    return std::span<const float>(data_).subspan(i * dim_, dim_);
  }
  const std::optional<FrameRate>& fps() const { return fps_; }
  FrameRate effective_fps() const { return fps_.value_or(kDefaultFrameRate); }

  friend bool operator==(const FeatureSequence&,
                         const FeatureSequence&) = default;

 private:
  std::size_t num_frames_;
  std::size_t dim_;
  std::vector<float> data_;
  std::optional<FrameRate> fps_;
};

/// One label token per frame.
class Segmentation {
 public:
  explicit Segmentation(std::vector<std::string> labels);

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& operator[](std::size_t i) const { return labels_[i]; }

  friend bool operator==(const Segmentation&, const Segmentation&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Sorted boundary frames of one video. Frame b is the first frame of a new
/// segment, so every boundary lies in [1, L-1] and a set of n boundaries
/// describes n + 1 segments.
class BoundarySet {
 public:
  BoundarySet(std::size_t num_frames, std::vector<std::size_t> frames);

  std::size_t num_frames() const { return num_frames_; }
  const std::vector<std::size_t>& frames() const { return frames_; }
  std::size_t size() const { return frames_.size(); }
  bool empty() const { return frames_.empty(); }
  std::size_t num_segments() const { return frames_.size() + 1; }

  friend bool operator==(const BoundarySet&, const BoundarySet&) = default;

 private:
  std::size_t num_frames_;
  std::vector<std::size_t> frames_;
};

// OTFS binary container. Layout, all little-endian:
//   "OTFS" | u32 version (=1) | u32 D | u64 L | u32 fps_num | u32 fps_den |
//   L*D f32, frame-major.
// fps_num = fps_den = 0 encodes "no frame rate recorded".
inline constexpr char kOtfsMagic[4] = {'O', 'T', 'F', 'S'};
inline constexpr std::uint32_t kOtfsVersion = 1;
inline constexpr std::size_t kOtfsHeaderSize = 4 + 4 + 4 + 8 + 4 + 4;

std::vector<std::uint8_t> encode_features(const FeatureSequence& seq);
FeatureSequence decode_features(std::span<const std::uint8_t> bytes);

FeatureSequence load_features(const std::filesystem::path& path);
void save_features(const FeatureSequence& seq,
                   const std::filesystem::path& path);

// CSV fallback: one frame per row, comma-separated floats, no header.
FeatureSequence load_features_csv(const std::filesystem::path& path,
                                  std::optional<FrameRate> fps = std::nullopt);
void save_features_csv(const FeatureSequence& seq,
                       const std::filesystem::path& path);

/// Dispatches on extension: ".csv" reads CSV, anything else reads OTFS.
FeatureSequence load_features_any(const std::filesystem::path& path);

// Label files: one token per line. Boundary files: one integer per line.
Segmentation load_labels(const std::filesystem::path& path);
void save_labels(const Segmentation& seg, const std::filesystem::path& path);
BoundarySet load_boundaries(const std::filesystem::path& path,
                            std::size_t num_frames);
void save_boundaries(const BoundarySet& b, const std::filesystem::path& path);

BoundarySet segmentation_to_boundaries(const Segmentation& seg);

/// Inverse conversion; segments are labelled "s0", "s1", ...
Segmentation boundaries_to_segmentation(const BoundarySet& b);

}  // namespace tempseg

#endif
