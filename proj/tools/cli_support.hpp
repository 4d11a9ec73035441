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

// Plumbing shared by the tempseg subcommands: RAII for C handles, status
// checking, atomic output staging and the run manifest.

#ifndef TEMPSEG_TOOLS_CLI_SUPPORT_HPP
#define TEMPSEG_TOOLS_CLI_SUPPORT_HPP

#include <cstdint>
#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tempseg/tempseg.h"

namespace cli {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct CliError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Throws CliError carrying the library's message when status != TSEG_OK.
void check(tseg_status status, const std::string& context);

template <typename T, void (*Free)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { Free(p); }
};
template <typename T, void (*Free)(T*)>
using Handle = std::unique_ptr<T, HandleDeleter<T, Free>>;

using Features = Handle<tseg_features, tseg_features_free>;
using Series = Handle<tseg_series, tseg_series_free>;
using Candidates = Handle<tseg_candidates, tseg_candidates_free>;
using Fusion = Handle<tseg_fusion, tseg_fusion_free>;
using Boundaries = Handle<tseg_boundaries, tseg_boundaries_free>;
using Labels = Handle<tseg_segmentation, tseg_segmentation_free>;
using RelationTable = Handle<tseg_relation_table, tseg_relation_table_free>;
using Mof = Handle<tseg_mof, tseg_mof_free>;

/// Takes ownership of a char* produced by the library.
std::string take_string(char* s);

struct Rate {
  std::uint32_t num = 5;
  std::uint32_t den = 1;
  double value() const { return double(num) / den; }
  std::string str() const;
};

/// "5", "29.97" or "30000/1001".
Rate parse_rate(const std::string& text);

/// round(seconds * rate), halves away from zero.
std::uint64_t seconds_to_frames(double seconds, Rate rate);

std::string sha256_file(const fs::path& path);
std::string read_file(const fs::path& path);
std::vector<std::uint64_t> parse_frame_list(const std::string& text);

/// Outputs are written to hidden temporaries next to their destinations and
/// renamed into place by commit(). Anything not committed is deleted.
class StagedOutputs {
 public:
  StagedOutputs() = default;
  StagedOutputs(const StagedOutputs&) = delete;
  StagedOutputs& operator=(const StagedOutputs&) = delete;
  ~StagedOutputs();

  /// Path to write instead of `final_path`.
  fs::path stage(const fs::path& final_path);
  void write_text(const fs::path& final_path, const std::string& text);
  void commit();

 private:
  std::vector<std::pair<fs::path, fs::path>> staged_;  // (temp, final)
  bool committed_ = false;
};

/// Everything needed to rerun a command: name, argv, parameters, input
/// digests and the library/generator identity.
class Manifest {
 public:
  Manifest(std::string command, std::vector<std::string> argv);

  Json& config() { return config_; }
  void add_input(const std::string& role, const fs::path& path);
  void add_output(const std::string& role, const fs::path& path);
  std::string dump() const;

 private:
  std::string command_;
  std::vector<std::string> argv_;
  Json config_ = Json::object();
  Json inputs_ = Json::array();
  Json outputs_ = Json::array();
};

}  // namespace cli

#endif
