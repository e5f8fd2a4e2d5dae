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


#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "miw/cache.hpp"
#include "miw/config_io.hpp"
#include "miw/error.hpp"
#include "miw/report_io.hpp"
#include "miw/solver.hpp"
#include "miw/zero_bias.hpp"

namespace fs = std::filesystem;

namespace {

// Scratch directory removed on scope exit.
class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = fs::temp_directory_path() / ("miw-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void ExpectSchemaError(const nlohmann::json& doc) {
  try {
    miw::ConfigurationFromJson(doc);
    FAIL("expected a schema error for " << doc.dump());
  } catch (const miw::Error& e) {
    CHECK(e.kind() == miw::ErrorKind::kSchema);
  }
}

}  // namespace

TEST_CASE("configuration round trip") {
  const auto cfg = miw::SolveGroundState(22);
  const auto doc = miw::ConfigurationToJson(cfg);
  CHECK(doc["schema_version"] == miw::kSchemaVersion);
  CHECK(doc["kind"] == "configuration");
  CHECK(doc["N"] == 22);
  REQUIRE(doc["values"].size() == 22);
  CHECK(doc["values"][0].is_string());

  const auto back = miw::ConfigurationFromJson(doc);
  CHECK(back.n == 22);
  CHECK(back.precision_digits == cfg.precision_digits);
  for (std::size_t i = 0; i < 22; ++i) CHECK(back.values[i] == cfg.values[i]);
  // A second trip is byte-stable.
  CHECK(miw::DumpDocument(miw::ConfigurationToJson(back)) == miw::DumpDocument(doc));
}

TEST_CASE("configuration schema errors") {
  const auto good = miw::ConfigurationToJson(miw::SolveGroundState(5));
  ExpectSchemaError(nlohmann::json::array());
  for (const char* field : {"schema_version", "kind", "N", "precision_digits", "values", "residual"}) {
    auto doc = good;
    doc.erase(field);
    ExpectSchemaError(doc);
  }
  auto version = good;
  version["schema_version"] = 99;
  ExpectSchemaError(version);
  auto kind = good;
  kind["kind"] = "report";
  ExpectSchemaError(kind);
  auto count = good;
  count["N"] = 6;
  ExpectSchemaError(count);
  auto small = good;
  small["N"] = 2;
  small["values"] = {"1", "-1"};
  ExpectSchemaError(small);
  auto number = good;
  number["values"][1] = 0.5;
  ExpectSchemaError(number);
  auto garbage = good;
  garbage["values"][1] = "0.5x";
  ExpectSchemaError(garbage);
  auto infinite = good;
  infinite["values"][1] = "inf";
  ExpectSchemaError(infinite);
}

TEST_CASE("reading files") {
  TempDir dir;
  const auto cfg = miw::SolveGroundState(11);
  const fs::path good = dir.path() / "good.json";
  miw::WriteFileAtomically(good, miw::DumpDocument(miw::ConfigurationToJson(cfg)));
  CHECK(miw::ReadConfigurationFile(good).values == cfg.values);

  const fs::path broken = dir.path() / "broken.json";
  miw::WriteFileAtomically(broken, "{ not json");
  CHECK_THROWS_AS(miw::ReadConfigurationFile(broken), miw::Error);

  auto doc = miw::ConfigurationToJson(cfg);
  std::string v = doc["values"][2];
  doc["values"][2] = "-" + v;
  const fs::path corrupt = dir.path() / "corrupt.json";
  miw::WriteFileAtomically(corrupt, miw::DumpDocument(doc));
  CHECK_NOTHROW(miw::ParseConfigurationFile(corrupt));
  try {
    miw::ReadConfigurationFile(corrupt);
    FAIL("expected an invariant error");
  } catch (const miw::Error& e) {
    CHECK(e.kind() == miw::ErrorKind::kInvariant);
    CHECK(std::string(e.what()).find("symmetry") != std::string::npos);
  }

  try {
    miw::ReadConfigurationFile(dir.path() / "missing.json");
    FAIL("expected a schema error");
  } catch (const miw::Error& e) {
    CHECK(e.kind() == miw::ErrorKind::kSchema);
  }
}

TEST_CASE("solution cache") {
  TempDir dir;
  const miw::SolutionCache cache(dir.path() / "cache");
  CHECK(cache.PathFor(22, 30).filename() == "N22_p30.json");
  CHECK_FALSE(cache.Load(22, 30).has_value());

  const auto first = cache.LoadOrSolve(22, {});
  CHECK_FALSE(first.hit);
  const std::string stored = Slurp(cache.PathFor(22, 30));
  const auto second = cache.LoadOrSolve(22, {});
  CHECK(second.hit);
  CHECK(second.cfg.values == first.cfg.values);
  CHECK(miw::DumpDocument(miw::ConfigurationToJson(second.cfg)) == stored);
  CHECK(Slurp(cache.PathFor(22, 30)) == stored);

  // A damaged entry is ignored and replaced.
  miw::WriteFileAtomically(cache.PathFor(22, 30), "{}");
  CHECK_FALSE(cache.Load(22, 30).has_value());
  const auto third = cache.LoadOrSolve(22, {});
  CHECK_FALSE(third.hit);
  CHECK(Slurp(cache.PathFor(22, 30)) == stored);
}

TEST_CASE("report formatting") {
  CHECK(miw::FormatReal(0.5) == "0.5");
  CHECK(miw::FormatReal(1.0 / 3.0, 5) == "0.33333");

  const auto d = miw::BuildDensity(miw::SolveGroundState(22));
  const std::string csv = miw::DensityCsv(d);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "interval_left,interval_right,height,mass");
  int rows = 0;
  double prev_left = -1e300;
  while (std::getline(in, line)) {
    ++rows;
    const double left = std::stod(line.substr(0, line.find(',')));
    CHECK(left > prev_left);
    prev_left = left;
  }
  CHECK(rows == 21);
}
