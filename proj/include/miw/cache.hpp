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

#ifndef MIW_CACHE_HPP_
#define MIW_CACHE_HPP_

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>

#include "miw/solver.hpp"

namespace miw {

// Tolerance used when a stored configuration is re-checked on load.
inline constexpr double kLoadTolerance = 1e-8;

// Parses a configuration document from disk without checking invariants.
// Throws Error(kSchema) for unreadable or malformed files.
Configuration ParseConfigurationFile(const std::filesystem::path& path);

// Parses a configuration document from disk and re-checks the structural
// properties. Throws Error(kSchema) for unreadable or malformed files and
// Error(kInvariant) naming the failed properties otherwise.
Configuration ReadConfigurationFile(const std::filesystem::path& path);

// Writes through a temporary file in the same directory and renames it
// into place, so readers never see a partial document.
void WriteFileAtomically(const std::filesystem::path& path, const std::string& contents);

// Solved configurations keyed by (N, precision digits), one JSON document
// per entry.
class SolutionCache {
 public:
  explicit SolutionCache(std::filesystem::path directory);

  // $MIW_CACHE_DIR, falling back to ./.miw-cache.
  static std::filesystem::path DefaultDirectory();

  const std::filesystem::path& directory() const { return directory_; }
  std::filesystem::path PathFor(std::size_t n, int precision_digits) const;

  // nullopt on a miss or on an entry that fails validation.
  std::optional<Configuration> Load(std::size_t n, int precision_digits) const;
  void Store(const Configuration& cfg) const;

  struct Lookup {
    Configuration cfg;
    bool hit = false;
  };
  Lookup LoadOrSolve(std::size_t n, const SolverOptions& opts) const;

 private:
  std::filesystem::path directory_;
};

}  // namespace miw

#endif  // MIW_CACHE_HPP_
