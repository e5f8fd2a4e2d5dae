// Copyright 2026 The miw-oscillator Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "miw/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>
#include <thread>

#include "miw/analysis.hpp"
#include "miw/config_io.hpp"
#include "miw/error.hpp"

namespace miw {

namespace {

std::string ReadAll(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kSchema, "cannot read " + path.string());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

Configuration ParseConfigurationFile(const std::filesystem::path& path) {
  const std::string text = ReadAll(path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::kSchema, path.string() + ": " + e.what());
  }
  return ConfigurationFromJson(doc);
}

Configuration ReadConfigurationFile(const std::filesystem::path& path) {
  Configuration cfg = ParseConfigurationFile(path);
  const PropertyReport report = VerifyProperties(cfg, kLoadTolerance);
  if (!report.passed()) {
    std::string names;
    for (const auto& f : report.Failures()) names += (names.empty() ? "" : ",") + f;
    throw Error(ErrorKind::kInvariant, path.string() + " fails: " + names);
  }
  return cfg;
}

void WriteFileAtomically(const std::filesystem::path& path, const std::string& contents) {
  static std::atomic<unsigned> counter{0};
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ostringstream suffix;
  suffix << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << '.' << counter++;
  const std::filesystem::path tmp = path.string() + suffix.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::kMissingDependency, "cannot write " + tmp.string());
    out << contents;
    if (!out.flush()) throw Error(ErrorKind::kMissingDependency, "short write to " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

SolutionCache::SolutionCache(std::filesystem::path directory) : directory_(std::move(directory)) {}

std::filesystem::path SolutionCache::DefaultDirectory() {
  if (const char* env = std::getenv("MIW_CACHE_DIR"); env != nullptr && *env != '\0') return env;
  return ".miw-cache";
}

std::filesystem::path SolutionCache::PathFor(std::size_t n, int precision_digits) const {
  return directory_ / ("N" + std::to_string(n) + "_p" + std::to_string(precision_digits) + ".json");
}

std::optional<Configuration> SolutionCache::Load(std::size_t n, int precision_digits) const {
  const auto path = PathFor(n, precision_digits);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  try {
    Configuration cfg = ReadConfigurationFile(path);
    if (cfg.n != n || cfg.precision_digits != precision_digits) return std::nullopt;
    return cfg;
  } catch (const Error&) {
    return std::nullopt;
  }
}

void SolutionCache::Store(const Configuration& cfg) const {
  WriteFileAtomically(PathFor(cfg.n, cfg.precision_digits), DumpDocument(ConfigurationToJson(cfg)));
}

SolutionCache::Lookup SolutionCache::LoadOrSolve(std::size_t n, const SolverOptions& opts) const {
  const int digits = opts.precision_digits > 0 ? opts.precision_digits : DefaultPrecisionDigits(n);
  if (auto cached = Load(n, digits)) return {std::move(*cached), true};
  Lookup fresh{SolveGroundState(n, opts), false};
  Store(fresh.cfg);
  // Round to the stored digits so a miss and a later hit agree exactly.
  fresh.cfg = ConfigurationFromJson(ConfigurationToJson(fresh.cfg));
  return fresh;
}

}  // namespace miw
