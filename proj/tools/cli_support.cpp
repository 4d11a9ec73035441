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

#include "cli_support.hpp"

#include <openssl/evp.h>

#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <numeric>
#include <sstream>

#include <unistd.h>

namespace cli {

void check(tseg_status status, const std::string& context) {
  if (status == TSEG_OK) return;
  throw CliError(context + ": " + tseg_last_error());
}

std::string take_string(char* s) {
  std::string out(s ? s : "");
  tseg_string_free(s);
  return out;
}

std::string Rate::str() const {
  return den == 1 ? std::to_string(num)
                  : std::to_string(num) + "/" + std::to_string(den);
}

namespace {

std::uint64_t parse_u64(std::string_view text, const std::string& what) {
  std::uint64_t v = 0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size())
    throw CliError("invalid " + what + ": '" + std::string(text) + "'");
  return v;
}

}  // namespace

Rate parse_rate(const std::string& text) {
  const std::string what = "frame rate";
  std::uint64_t num = 0, den = 1;
  if (const auto slash = text.find('/'); slash != std::string::npos) {
    num = parse_u64(std::string_view(text).substr(0, slash), what);
    den = parse_u64(std::string_view(text).substr(slash + 1), what);
  } else if (const auto dot = text.find('.'); dot != std::string::npos) {
    const std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    const std::size_t decimals = text.size() - dot - 1;
    if (decimals > 6) throw CliError("frame rate has too many decimals: " + text);
    num = parse_u64(digits, what);
    for (std::size_t i = 0; i < decimals; ++i) den *= 10;
  } else {
    num = parse_u64(text, what);
  }
  if (num == 0 || den == 0) throw CliError("frame rate must be positive: " + text);
  const std::uint64_t g = std::gcd(num, den);
  num /= g;
  den /= g;
  if (num > UINT32_MAX || den > UINT32_MAX)
    throw CliError("frame rate out of range: " + text);
  return Rate{std::uint32_t(num), std::uint32_t(den)};
}

std::uint64_t seconds_to_frames(double seconds, Rate rate) {
  if (!std::isfinite(seconds) || seconds < 0)
    throw CliError("durations must be non-negative");
  return std::uint64_t(std::llround(seconds * rate.num / rate.den));
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CliError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string sha256_file(const fs::path& path) {
  const std::string bytes = read_file(path);
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest.data(), &len, EVP_sha256(),
                 nullptr) != 1)
    throw CliError("sha256 failed for " + path.string());
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

std::vector<std::uint64_t> parse_frame_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos <= text.size() && !text.empty()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    out.push_back(parse_u64(std::string_view(text).substr(pos, comma - pos),
                            "frame index"));
    pos = comma + 1;
  }
  return out;
}

StagedOutputs::~StagedOutputs() {
  if (committed_) return;
  std::error_code ec;
  for (const auto& [tmp, final_path] : staged_) fs::remove(tmp, ec);
}

fs::path StagedOutputs::stage(const fs::path& final_path) {
  for (const auto& [tmp, dst] : staged_)
    if (dst == final_path)
      throw CliError("output path given twice: " + final_path.string());
  fs::path tmp = final_path;
  tmp.replace_filename("." + final_path.filename().string() + ".tmp" +
                       std::to_string(::getpid()));
  staged_.emplace_back(tmp, final_path);
  return tmp;
}

void StagedOutputs::write_text(const fs::path& final_path,
                               const std::string& text) {
  const fs::path tmp = stage(final_path);
  std::ofstream out(tmp, std::ios::binary);
  out << text;
  out.close();
  if (!out) throw CliError("cannot write " + final_path.string());
}

void StagedOutputs::commit() {
  for (const auto& [tmp, final_path] : staged_) {
    std::error_code ec;
    fs::rename(tmp, final_path, ec);
    if (ec)
      throw CliError("cannot move output into place at " + final_path.string() +
                     ": " + ec.message());
  }
  committed_ = true;
}

Manifest::Manifest(std::string command, std::vector<std::string> argv)
    : command_(std::move(command)), argv_(std::move(argv)) {}

void Manifest::add_input(const std::string& role, const fs::path& path) {
  inputs_.push_back({{"role", role},
                     {"path", path.string()},
                     {"bytes", fs::file_size(path)},
                     {"sha256", sha256_file(path)}});
}

void Manifest::add_output(const std::string& role, const fs::path& path) {
  outputs_.push_back({{"role", role}, {"path", path.string()}});
}

std::string Manifest::dump() const {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm utc{};
  gmtime_r(&now, &utc);
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", &utc);

  Json j;
  j["command"] = command_;
  j["argv"] = argv_;
  j["version"] = tseg_version();
  j["generator"] = tseg_generator_id();
  j["config"] = config_;
  j["inputs"] = inputs_;
  j["outputs"] = outputs_;
  j["timestamp"] = stamp;
  return j.dump(2) + "\n";
}

}  // namespace cli
