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

#include "tempseg/feature_store.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>

#include "tempseg/error.hpp"

namespace tempseg {

namespace {

static_assert(std::endian::native == std::endian::little ||
                  std::endian::native == std::endian::big,
              "mixed-endian platforms are not supported");

template <typename T>
void put_le(std::vector<std::uint8_t>& out, T value) {
  static_assert(std::is_trivially_copyable_v<T>);
  std::uint8_t bytes[sizeof(T)];
  std::memcpy(bytes, &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big)
    std::reverse(std::begin(bytes), std::end(bytes));
  out.insert(out.end(), std::begin(bytes), std::end(bytes));
}

template <typename T>
T get_le(std::span<const std::uint8_t> in, std::size_t offset) {
  std::uint8_t bytes[sizeof(T)];
  std::memcpy(bytes, in.data() + offset, sizeof(T));
  if constexpr (std::endian::native == std::endian::big)
    std::reverse(std::begin(bytes), std::end(bytes));
  T value;
  std::memcpy(&value, bytes, sizeof(T));
  return value;
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path.string() + "'");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) fail(ErrorCode::Io, "read error on '" + path.string() + "'");
  return bytes;
}

void write_file(const std::filesystem::path& path,
                std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::Io, "cannot create '" + path.string() + "'");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  out.flush();
  if (!out) fail(ErrorCode::Io, "write error on '" + path.string() + "'");
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  write_file(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()),
                             text.size()));
}

// Splits on '\n', strips a trailing '\r', and drops one trailing empty line
// left by a final newline.
std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open '" + path.string() + "'");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  if (in.bad()) fail(ErrorCode::Io, "read error on '" + path.string() + "'");
  return lines;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

FeatureSequence::FeatureSequence(std::size_t num_frames, std::size_t dim,
                                 std::vector<float> data,
                                 std::optional<FrameRate> fps)
    : num_frames_(num_frames),
      dim_(dim),
      data_(std::move(data)),
      fps_(fps) {
  require(num_frames_ >= 1, "feature sequence needs at least one frame");
  require(dim_ >= 1, "feature dimension must be at least 1");
  require(data_.size() / dim_ == num_frames_ && data_.size() % dim_ == 0,
          "feature data length " + std::to_string(data_.size()) +
              " does not match " + std::to_string(num_frames_) + " x " +
              std::to_string(dim_));
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!std::isfinite(data_[i]))
      fail(ErrorCode::Format, "non-finite feature value at frame " +
                                  std::to_string(i / dim_) + ", component " +
                                  std::to_string(i % dim_));
  }
  if (fps_) require(fps_->num > 0 && fps_->den > 0, "fps must be positive");
}

Segmentation::Segmentation(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  require(!labels_.empty(), "segmentation needs at least one frame");
  for (std::size_t i = 0; i < labels_.size(); ++i)
    require(!labels_[i].empty(),
            "empty label token at frame " + std::to_string(i));
}

BoundarySet::BoundarySet(std::size_t num_frames, std::vector<std::size_t> frames)
    : num_frames_(num_frames), frames_(std::move(frames)) {
  require(num_frames_ >= 1, "boundary set needs num_frames >= 1");
  for (std::size_t i = 0; i < frames_.size(); ++i) {
    const auto b = frames_[i];
    if (b < 1 || b + 1 > num_frames_)
      fail(ErrorCode::OutOfRange, "boundary " + std::to_string(b) +
                                      " outside [1, " +
                                      std::to_string(num_frames_ - 1) + "]");
    if (i > 0 && frames_[i - 1] >= b)
      fail(ErrorCode::InvalidArgument,
           "boundaries must be strictly increasing");
  }
}

std::vector<std::uint8_t> encode_features(const FeatureSequence& seq) {
  std::vector<std::uint8_t> out;
  out.reserve(kOtfsHeaderSize + seq.data().size() * sizeof(float));
  out.insert(out.end(), std::begin(kOtfsMagic), std::end(kOtfsMagic));
  put_le<std::uint32_t>(out, kOtfsVersion);
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(seq.dim()));
  put_le<std::uint64_t>(out, seq.num_frames());
  const FrameRate fps = seq.fps().value_or(FrameRate{0, 0});
  put_le<std::uint32_t>(out, fps.num);
  put_le<std::uint32_t>(out, fps.den);
  for (float v : seq.data()) put_le<float>(out, v);
  return out;
}

FeatureSequence decode_features(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 4 || std::memcmp(bytes.data(), kOtfsMagic, 4) != 0)
    fail(ErrorCode::Format, "bad magic: not an OTFS feature file");
  if (bytes.size() < kOtfsHeaderSize)
    fail(ErrorCode::Format, "truncated OTFS header");
  const auto version = get_le<std::uint32_t>(bytes, 4);
  if (version != kOtfsVersion)
    fail(ErrorCode::Format,
         "unsupported OTFS version " + std::to_string(version));
  const std::uint64_t dim = get_le<std::uint32_t>(bytes, 8);
  const std::uint64_t frames = get_le<std::uint64_t>(bytes, 12);
  const auto fps_num = get_le<std::uint32_t>(bytes, 20);
  const auto fps_den = get_le<std::uint32_t>(bytes, 24);
  if (dim == 0 || frames == 0)
    fail(ErrorCode::Format, "OTFS header declares an empty sequence");

  const std::uint64_t payload = bytes.size() - kOtfsHeaderSize;
  const std::uint64_t max_values = payload / sizeof(float);
  if (frames > max_values / dim || payload != frames * dim * sizeof(float)) {
    fail(ErrorCode::Format,
         "OTFS payload size " + std::to_string(payload) +
             " bytes does not match declared " + std::to_string(frames) +
             " x " + std::to_string(dim) + " floats (truncated or padded)");
  }

  std::optional<FrameRate> fps;
  if (fps_num != 0 || fps_den != 0) {
    if (fps_num == 0 || fps_den == 0)
      fail(ErrorCode::Format, "OTFS header has a malformed frame rate");
    fps = FrameRate{fps_num, fps_den};
  }

  std::vector<float> data(frames * dim);
  for (std::size_t i = 0; i < data.size(); ++i)
    data[i] = get_le<float>(bytes, kOtfsHeaderSize + i * sizeof(float));
  return FeatureSequence(frames, dim, std::move(data), fps);
}

FeatureSequence load_features(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  try {
    return decode_features(bytes);
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void save_features(const FeatureSequence& seq,
                   const std::filesystem::path& path) {
  write_file(path, encode_features(seq));
}

FeatureSequence load_features_csv(const std::filesystem::path& path,
                                  std::optional<FrameRate> fps) {
  const auto lines = read_lines(path);
  std::vector<float> data;
  std::size_t dim = 0;
  std::size_t frames = 0;
  for (std::size_t row = 0; row < lines.size(); ++row) {
    const std::string& line = lines[row];
    if (trim(line).empty()) continue;
    std::size_t cols = 0;
    std::size_t start = 0;
    while (true) {
      const auto comma = line.find(',', start);
      const std::string cell =
          trim(std::string_view(line).substr(start, comma - start));
      float v = 0.0f;
      const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (cell.empty() || res.ec != std::errc() ||
          res.ptr != cell.data() + cell.size())
        fail(ErrorCode::Format, path.string() + ":" + std::to_string(row + 1) +
                                    ": bad float '" + cell + "'");
      data.push_back(v);
      ++cols;
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (dim == 0) dim = cols;
    if (cols != dim)
      fail(ErrorCode::Format, path.string() + ":" + std::to_string(row + 1) +
                                  ": expected " + std::to_string(dim) +
                                  " columns, got " + std::to_string(cols));
    ++frames;
  }
  if (frames == 0) fail(ErrorCode::Format, path.string() + ": no rows");
  return FeatureSequence(frames, dim, std::move(data), fps);
}

void save_features_csv(const FeatureSequence& seq,
                       const std::filesystem::path& path) {
  std::string text;
  for (std::size_t i = 0; i < seq.num_frames(); ++i) {
    const auto f = seq.frame(i);
    for (std::size_t d = 0; d < f.size(); ++d) {
      if (d) text.push_back(',');
      char buf[32];
      auto res = std::to_chars(buf, buf + sizeof(buf), f[d]);
      text.append(buf, res.ptr);
    }
    text.push_back('\n');
  }
  write_text(path, text);
}

FeatureSequence load_features_any(const std::filesystem::path& path) {
  if (path.extension() == ".csv") return load_features_csv(path);
  return load_features(path);
}

Segmentation load_labels(const std::filesystem::path& path) {
  auto lines = read_lines(path);
  std::vector<std::string> labels;
  labels.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string token = trim(lines[i]);
    if (token.empty())
      fail(ErrorCode::Format, path.string() + ":" + std::to_string(i + 1) +
                                  ": empty label");
    labels.push_back(std::move(token));
  }
  if (labels.empty()) fail(ErrorCode::Format, path.string() + ": no labels");
  return Segmentation(std::move(labels));
}

void save_labels(const Segmentation& seg, const std::filesystem::path& path) {
  std::string text;
  for (const auto& l : seg.labels()) {
    text += l;
    text.push_back('\n');
  }
  write_text(path, text);
}

BoundarySet load_boundaries(const std::filesystem::path& path,
                            std::size_t num_frames) {
  const auto lines = read_lines(path);
  std::vector<std::size_t> frames;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string token = trim(lines[i]);
    if (token.empty()) continue;
    std::size_t v = 0;
    const auto res =
        std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc() || res.ptr != token.data() + token.size())
      fail(ErrorCode::Format, path.string() + ":" + std::to_string(i + 1) +
                                  ": bad boundary '" + token + "'");
    frames.push_back(v);
  }
  try {
    return BoundarySet(num_frames, std::move(frames));
  } catch (const Error& e) {
    throw Error(e.code(), path.string() + ": " + e.what());
  }
}

void save_boundaries(const BoundarySet& b, const std::filesystem::path& path) {
  std::string text;
  for (auto f : b.frames()) text += std::to_string(f) + "\n";
  write_text(path, text);
}

BoundarySet segmentation_to_boundaries(const Segmentation& seg) {
  std::vector<std::size_t> frames;
  for (std::size_t i = 1; i < seg.size(); ++i)
    if (seg[i] != seg[i - 1]) frames.push_back(i);
  return BoundarySet(seg.size(), std::move(frames));
}

Segmentation boundaries_to_segmentation(const BoundarySet& b) {
  std::vector<std::string> labels;
  labels.reserve(b.num_frames());
  std::size_t segment = 0;
  auto next = b.frames().begin();
  for (std::size_t i = 0; i < b.num_frames(); ++i) {
    if (next != b.frames().end() && *next == i) {
      ++segment;
      ++next;
    }
    labels.push_back("s" + std::to_string(segment));
  }
  return Segmentation(std::move(labels));
}

}  // namespace tempseg
