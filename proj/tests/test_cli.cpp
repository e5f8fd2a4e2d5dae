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


#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli_runner.hpp"
#include "doctest.h"
#include "json.hpp"

using miw::testing::CliSandbox;
using nlohmann::json;

namespace {

std::vector<std::vector<std::string>> ParseCsv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

double Num(const json& j) { return std::stod(j.get<std::string>()); }

}  // namespace

TEST_CASE("cli solve") {
  CliSandbox box;
  auto r = box.Run("solve --n 3 --stable-output");
  REQUIRE(r.exit_code == 0);
  const auto doc = json::parse(r.out);
  CHECK(std::abs(Num(doc["values"][0]) - 1) <= 1e-12);
  CHECK(std::abs(Num(doc["values"][1])) <= 1e-12);
  CHECK(std::abs(Num(doc["values"][2]) + 1) <= 1e-12);
  CHECK_FALSE(doc.contains("metadata"));

  r = box.Run("solve --n 22 --out n22.json");
  REQUIRE(r.exit_code == 0);
  const auto summary = json::parse(r.out);
  CHECK(std::abs(Num(summary["x1"]) - 2.0025) <= 5e-4);
  CHECK(summary["metadata"].contains("solve_seconds"));
  CHECK(json::parse(miw::testing::ReadText(box.file("n22.json")))["N"] == 22);

  r = box.Run("solve --n 2");
  CHECK(r.exit_code == 2);
  const auto err = json::parse(r.err);
  CHECK(err["message"] == "N must be ≥ 3");
}

TEST_CASE("cli usage errors") {
  CliSandbox box;
  CHECK(box.Run("").exit_code == 2);
  CHECK(box.Run("solve").exit_code == 2);
  CHECK(box.Run("solve --n 5 --bogus").exit_code == 2);
  CHECK(box.Run("ou --m 5 --t 1 --reps 10 --seed 1").exit_code == 2);
  CHECK(box.Run("--help").exit_code == 0);
}

TEST_CASE("cli verify, density and distance") {
  CliSandbox box;
  REQUIRE(box.Run("solve --n 22 --out n22.json").exit_code == 0);

  auto r = box.Run("verify n22.json");
  CHECK(r.exit_code == 0);
  CHECK(json::parse(r.out)["properties"]["passed"] == true);

  r = box.Run("verify n22.json --csv");
  CHECK(r.exit_code == 0);
  CHECK(ParseCsv(r.out).size() == 2);

  auto doc = json::parse(miw::testing::ReadText(box.file("n22.json")));
  doc["values"][4] = "-" + doc["values"][4].get<std::string>();
  std::ofstream(box.file("bad.json")) << doc.dump();
  r = box.Run("verify bad.json");
  CHECK(r.exit_code == 4);
  const auto err = json::parse(r.err);
  CHECK(err["error"] == "invariant");
  const auto& failed = err["failed_properties"];
  CHECK(std::find(failed.begin(), failed.end(), "symmetry") != failed.end());
  CHECK(json::parse(r.out)["properties"]["max_symmetry_defect"] != "0");
  CHECK(box.Run("density bad.json").exit_code == 4);
  CHECK(box.Run("distance bad.json").exit_code == 4);

  std::ofstream(box.file("schema.json")) << R"({"schema_version": 1, "kind": "configuration"})";
  CHECK(box.Run("verify schema.json").exit_code == 3);
  std::ofstream(box.file("text.json")) << "not json";
  CHECK(box.Run("density text.json").exit_code == 3);

  r = box.Run("density n22.json --csv");
  REQUIRE(r.exit_code == 0);
  const auto rows = ParseCsv(r.out);
  REQUIRE(rows.size() == 22);
  CHECK(rows[0] == std::vector<std::string>{"interval_left", "interval_right", "height", "mass"});
  double mass = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) mass += std::stod(rows[i][3]);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));

  r = box.Run("distance n22.json");
  REQUIRE(r.exit_code == 0);
  const auto dist = json::parse(r.out)["distances"];
  CHECK(dist["bounds_hold"] == true);
  CHECK(Num(dist["dW_to_normal"]) == doctest::Approx(0.0631078051518754).epsilon(1e-12));
}

TEST_CASE("cli roots") {
  CliSandbox box;
  auto r = box.Run("roots --n 5");
  REQUIRE(r.exit_code == 0);
  const auto doc = json::parse(r.out);
  REQUIRE(doc["roots"].size() == 2);
  CHECK(doc["roots"][0]["n"] == 2);
  CHECK(doc["roots"][1]["n"] == 3);
  CHECK(Num(doc["roots"][0]["a"]) == 1.0);
  CHECK(Num(doc["roots"][0]["b"]) == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  for (const auto& row : doc["roots"]) CHECK(row["a_gt_b"] == true);

  r = box.Run("roots --n 5 --csv");
  REQUIRE(r.exit_code == 0);
  CHECK(ParseCsv(r.out).size() == 3);
}

TEST_CASE("cli sweep") {
  CliSandbox box;
  auto r = box.Run("sweep --n-list 11,22,50,100,200 --out-dir sweep --stable-output");
  REQUIRE(r.exit_code == 0);
  const std::string csv = miw::testing::ReadText(box.file("sweep/sweep.csv"));
  const auto rows = ParseCsv(csv);
  REQUIRE(rows.size() == 6);
  const auto& header = rows[0];
  const auto col = [&](const std::string& name) {
    return static_cast<std::size_t>(std::find(header.begin(), header.end(), name) - header.begin());
  };
  double prev = 1e9;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const double dw = std::stod(rows[i][col("dW_to_normal")]);
    CHECK(dw < prev);
    prev = dw;
    CHECK(dw <= std::stod(rows[i][col("stein_upper")]));
    CHECK(rows[i][col("status")] == "ok");
  }
  for (std::size_t n : {11, 22, 50, 100, 200}) {
    CHECK(std::filesystem::exists(box.file("sweep/report_N" + std::to_string(n) + ".json")));
  }

  const auto again = box.Run("sweep --n-list 11,22,50,100,200 --out-dir sweep --stable-output");
  CHECK(again.exit_code == 0);
  CHECK(again.out == r.out);
  CHECK(miw::testing::ReadText(box.file("sweep/sweep.csv")) == csv);

  CHECK(box.Run("sweep --n-list 11,2 --out-dir bad").exit_code == 2);
}

TEST_CASE("cli ou") {
  CliSandbox box;
  auto r = box.Run("ou --normal --m 50 --t 4 --reps 200 --seed 7 --stable-output --out paths.csv");
  REQUIRE(r.exit_code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc["header"]["seed"] == 7);
  CHECK(doc["header"]["N"] == "normal");
  CHECK(std::abs(Num(doc["statistics"]["stationary_variance"]["value"]) - 1) < 0.1);
  const std::string paths = miw::testing::ReadText(box.file("paths.csv"));
  CHECK(paths.rfind("# seed=7 m=50 N=normal T=4 reps=200\n", 0) == 0);
  CHECK(ParseCsv(paths).size() == 1 + 200 * 201);

  const auto again = box.Run("ou --normal --m 50 --t 4 --reps 200 --seed 7 --stable-output --out paths.csv");
  CHECK(again.out == r.out);
  CHECK(miw::testing::ReadText(box.file("paths.csv")) == paths);

  r = box.Run("ou --n 22 --m 5 --t 1 --reps 20 --seed 1");
  CHECK(r.exit_code == 0);
  CHECK(r.err.find("slow-growth") != std::string::npos);
  CHECK(json::parse(r.out)["within_slow_growth_regime"] == false);

  r = box.Run("ou --n 23 --m 1 --t 1 --reps 20 --seed 1 --no-solve");
  CHECK(r.exit_code == 5);
  CHECK(json::parse(r.err)["error"] == "missing-dependency");
}
