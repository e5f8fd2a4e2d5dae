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


// Command-line front-end for the ground-state solver and its analyses.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "miw/analysis.hpp"
#include "miw/cache.hpp"
#include "miw/config_io.hpp"
#include "miw/error.hpp"
#include "miw/metrics.hpp"
#include "miw/ou_chain.hpp"
#include "miw/report_io.hpp"
#include "miw/solver.hpp"
#include "miw/stats.hpp"
#include "miw/zero_bias.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitSchema = 3;
constexpr int kExitInvariant = 4;
constexpr int kExitMissing = 5;

struct Globals {
  bool stable_output = false;
  bool csv = false;
  int digits = miw::kReportDigits;
  std::string cache_dir;
};

int ExitCodeFor(miw::ErrorKind kind) {
  switch (kind) {
    case miw::ErrorKind::kInvalidInput:
      return kExitUsage;
    case miw::ErrorKind::kSchema:
      return kExitSchema;
    case miw::ErrorKind::kInvariant:
      return kExitInvariant;
    case miw::ErrorKind::kMissingDependency:
      return kExitMissing;
    default:
      return kExitFailure;
  }
}

void PrintError(const std::string& kind, const std::string& message, int code,
                const json& extra = json::object()) {
  json err = {{"error", kind}, {"message", message}, {"exit_code", code}};
  err.update(extra);
  std::cerr << err.dump() << "\n";
}

int Fail(const miw::Error& e) {
  const int code = ExitCodeFor(e.kind());
  PrintError(std::string(miw::ErrorKindName(e.kind())), e.what(), code);
  return code;
}

void Warn(const std::string& message) { std::cerr << json{{"warning", message}}.dump() << "\n"; }

std::string UtcTimestamp() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

// Adds the wall-clock metadata block unless byte-stable output was requested.
void AddMetadata(json& doc, const Globals& g, std::optional<double> elapsed = std::nullopt) {
  if (g.stable_output) return;
  json meta = {{"generated_at", UtcTimestamp()}};
  if (elapsed) meta["elapsed_seconds"] = miw::FormatReal(*elapsed, 6);
  doc["metadata"] = std::move(meta);
}

void Emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
  } else {
    miw::WriteFileAtomically(out, text);
  }
}

miw::SolutionCache MakeCache(const Globals& g) {
  return miw::SolutionCache(g.cache_dir.empty() ? miw::SolutionCache::DefaultDirectory() : fs::path(g.cache_dir));
}

double Seconds(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ---- solve ----

struct SolveArgs {
  std::size_t n = 0;
  int precision = 0;
  std::string out;
  bool no_cache = false;
};

int RunSolve(const SolveArgs& a, const Globals& g) {
  if (a.n < 3) throw miw::Error(miw::ErrorKind::kInvalidInput, "N must be ≥ 3");
  miw::SolverOptions opts;
  opts.precision_digits = a.precision;
  const auto start = std::chrono::steady_clock::now();
  miw::Configuration cfg;
  bool hit = false;
  if (a.no_cache) {
    cfg = miw::SolveGroundState(a.n, opts);
  } else {
    auto lookup = MakeCache(g).LoadOrSolve(a.n, opts);
    cfg = std::move(lookup.cfg);
    hit = lookup.hit;
  }
  const double elapsed = Seconds(start);

  json doc = miw::ConfigurationToJson(cfg);
  AddMetadata(doc, g, elapsed);
  if (a.out.empty()) {
    std::cout << miw::DumpDocument(doc);
    return kExitOk;
  }
  miw::WriteFileAtomically(a.out, miw::DumpDocument(doc));
  json summary = {{"kind", "solve_summary"},
                  {"schema_version", miw::kSchemaVersion},
                  {"N", cfg.n},
                  {"x1", cfg.exact_values.front().to_string(g.digits)},
                  {"residual", cfg.residual.to_string(g.digits)},
                  {"solver_iterations", cfg.solver_iterations},
                  {"output", a.out}};
  if (!g.stable_output) summary["metadata"] = {{"cache_hit", hit}, {"solve_seconds", miw::FormatReal(elapsed, 6)}};
  std::cout << miw::DumpDocument(summary);
  return kExitOk;
}

// ---- verify / density / distance ----

struct FileArgs {
  std::string file;
  double tol = miw::kLoadTolerance;
  std::string out;
};

json PropertyExtra(const miw::PropertyReport& r) {
  json failed = json::array();
  for (const auto& f : r.Failures()) failed.push_back(f);
  return {{"failed_properties", failed},
          {"max_symmetry_defect", miw::FormatReal(r.max_symmetry_defect)}};
}

int RunVerify(const FileArgs& a, const Globals& g) {
  const miw::Configuration cfg = miw::ParseConfigurationFile(a.file);
  const miw::PropertyReport props = miw::VerifyProperties(cfg, a.tol);
  // The energy is only defined for strictly decreasing values.
  std::optional<miw::HamiltonianReport> energy;
  if (props.monotone) energy = miw::Hamiltonian(cfg);

  if (g.csv) {
    std::string text = miw::PropertyCsvHeader();
    text += miw::PropertyCsvRow(props, energy.value_or(miw::HamiltonianReport{}), g.digits);
    Emit(text, a.out);
  } else {
    json doc = {{"schema_version", miw::kSchemaVersion},
                {"kind", "verify_report"},
                {"source", fs::path(a.file).filename().string()},
                {"properties", miw::ToJson(props, g.digits)},
                {"hamiltonian", energy ? miw::ToJson(*energy, g.digits) : json(nullptr)}};
    if (props.monotone) {
      const auto rows = miw::QuantileDeviation(cfg);
      doc["quantile_deviation"] = miw::QuantileRowsToJson(rows, g.digits);
      doc["max_intermediate_quantile_deviation"] = miw::FormatReal(miw::MaxIntermediateDeviation(rows), g.digits);
    }
    AddMetadata(doc, g);
    Emit(miw::DumpDocument(doc), a.out);
  }
  if (!props.passed()) {
    std::string names;
    for (const auto& f : props.Failures()) names += (names.empty() ? "" : ", ") + f;
    PrintError("invariant", a.file + " fails: " + names, kExitInvariant, PropertyExtra(props));
    return kExitInvariant;
  }
  return kExitOk;
}

// Loads a configuration for the analysis commands, reporting invariant
// failures the same way verify does.
miw::Configuration LoadChecked(const FileArgs& a) {
  const miw::Configuration cfg = miw::ParseConfigurationFile(a.file);
  const miw::PropertyReport props = miw::VerifyProperties(cfg, a.tol);
  if (!props.passed()) {
    std::string names;
    for (const auto& f : props.Failures()) names += (names.empty() ? "" : ", ") + f;
    throw miw::Error(miw::ErrorKind::kInvariant, a.file + " fails: " + names);
  }
  return cfg;
}

int RunDensity(const FileArgs& a, const Globals& g) {
  const miw::Configuration cfg = LoadChecked(a);
  const miw::ZeroBiasDensity density = miw::BuildDensity(cfg);
  if (g.csv) {
    Emit(miw::DensityCsv(density, g.digits), a.out);
    return kExitOk;
  }
  json doc = {{"schema_version", miw::kSchemaVersion},
              {"kind", "density_report"},
              {"N", cfg.n},
              {"density", miw::DensityToJson(density, g.digits)},
              {"total_mass", miw::FormatReal(density.TotalMass(), g.digits)},
              {"second_moment", miw::FormatReal(density.Moment(2), g.digits)}};
  AddMetadata(doc, g);
  Emit(miw::DumpDocument(doc), a.out);
  return kExitOk;
}

int RunDistance(const FileArgs& a, const Globals& g) {
  const miw::Configuration cfg = LoadChecked(a);
  const miw::DistanceReport report = miw::ComputeDistances(cfg);
  if (g.csv) {
    Emit(miw::DistanceCsvHeader() + miw::DistanceCsvRow(report, g.digits), a.out);
  } else {
    json doc = {{"schema_version", miw::kSchemaVersion},
                {"kind", "distance_report"},
                {"distances", miw::ToJson(report, g.digits)}};
    AddMetadata(doc, g);
    Emit(miw::DumpDocument(doc), a.out);
  }
  if (!report.BoundsHold()) throw miw::Error(miw::ErrorKind::kInvariant, "distance bounds violated");
  return kExitOk;
}

// ---- roots ----

struct RootsArgs {
  std::size_t n = 0;
  int precision = 0;
  std::string out;
};

int RunRoots(const RootsArgs& a, const Globals& g) {
  if (a.n < 3) throw miw::Error(miw::ErrorKind::kInvalidInput, "N must be ≥ 3");
  miw::SolverOptions opts;
  opts.precision_digits = a.precision > 0 ? a.precision : miw::DefaultPrecisionDigits(a.n);
  const std::size_t last = miw::MedianIndex(a.n);

  struct Row {
    std::size_t n;
    miw::Real a, b;
  };
  std::vector<Row> rows;
  for (std::size_t k = 2; k <= last; ++k) {
    rows.push_back({k, miw::FindLargestRootXn(k, opts), miw::FindLargestRootSn(k, opts)});
  }
  bool a_increasing = true, b_increasing = true, all_a_gt_b = true;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    all_a_gt_b = all_a_gt_b && rows[i].a > rows[i].b;
    if (i > 0) {
      a_increasing = a_increasing && rows[i].a > rows[i - 1].a;
      b_increasing = b_increasing && rows[i].b > rows[i - 1].b;
    }
  }

  if (g.csv) {
    std::string text = "n,a_n,b_n,a_gt_b\n";
    for (const auto& r : rows) {
      text += std::to_string(r.n) + "," + r.a.to_string(g.digits) + "," + r.b.to_string(g.digits) + "," +
              (r.a > r.b ? "true" : "false") + "\n";
    }
    Emit(text, a.out);
  } else {
    json list = json::array();
    for (const auto& r : rows) {
      list.push_back({{"n", r.n}, {"a", r.a.to_string(g.digits)}, {"b", r.b.to_string(g.digits)}, {"a_gt_b", r.a > r.b}});
    }
    json doc = {{"schema_version", miw::kSchemaVersion},
                {"kind", "roots_report"},
                {"N", a.n},
                {"precision_digits", opts.precision_digits},
                {"roots", std::move(list)},
                {"a_increasing", a_increasing},
                {"b_increasing", b_increasing},
                {"a_gt_b", all_a_gt_b}};
    AddMetadata(doc, g);
    Emit(miw::DumpDocument(doc), a.out);
  }
  return kExitOk;
}

// ---- sweep ----

struct SweepArgs {
  std::vector<std::size_t> n_list;
  std::string out_dir;
  int precision = 0;
  double tol = miw::kLoadTolerance;
};

struct SweepRow {
  std::size_t n = 0;
  std::optional<miw::DistanceReport> distances;
  std::optional<miw::PropertyReport> properties;
  std::string error;
  bool ok() const { return error.empty() && properties && properties->passed() && distances->BoundsHold(); }
};

SweepRow SweepOne(std::size_t n, const SweepArgs& a, const miw::SolutionCache& cache) {
  SweepRow row;
  row.n = n;
  try {
    miw::SolverOptions opts;
    opts.precision_digits = a.precision;
    const miw::Configuration cfg = cache.LoadOrSolve(n, opts).cfg;
    row.properties = miw::VerifyProperties(cfg, a.tol);
    row.distances = miw::ComputeDistances(cfg);
  } catch (const miw::Error& e) {
    row.error = std::string(miw::ErrorKindName(e.kind())) + ": " + e.what();
  }
  return row;
}

std::string SweepCsv(const std::vector<SweepRow>& rows, int digits) {
  std::string header = miw::DistanceCsvHeader();
  header.pop_back();
  std::string text = header + ",properties_ok,status\n";
  for (const auto& r : rows) {
    if (r.distances) {
      std::string line = miw::DistanceCsvRow(*r.distances, digits);
      line.pop_back();
      text += line + "," + (r.properties->passed() ? "true" : "false") + "," + (r.ok() ? "ok" : "failed") + "\n";
    } else {
      // Keep the column count for a failed row.
      const auto columns = static_cast<std::size_t>(std::count(header.begin(), header.end(), ','));
      text += std::to_string(r.n) + std::string(columns, ',') + ",false,failed\n";
    }
  }
  return text;
}

int RunSweep(const SweepArgs& a, const Globals& g) {
  if (a.n_list.empty()) throw miw::Error(miw::ErrorKind::kInvalidInput, "empty N list");
  for (std::size_t n : a.n_list) {
    if (n < 3) throw miw::Error(miw::ErrorKind::kInvalidInput, "N must be ≥ 3");
  }
  const miw::SolutionCache cache = MakeCache(g);
  std::vector<std::future<SweepRow>> jobs;
  for (std::size_t n : a.n_list) {
    jobs.push_back(std::async(std::launch::async, [n, &a, &cache] { return SweepOne(n, a, cache); }));
  }
  std::vector<SweepRow> rows;
  for (auto& j : jobs) rows.push_back(j.get());

  const fs::path dir(a.out_dir);
  fs::create_directories(dir);
  json list = json::array();
  bool all_ok = true;
  for (const auto& r : rows) {
    all_ok = all_ok && r.ok();
    json entry = {{"N", r.n}, {"ok", r.ok()}};
    if (!r.error.empty()) entry["error"] = r.error;
    if (r.properties) entry["properties"] = miw::ToJson(*r.properties, g.digits);
    if (r.distances) entry["distances"] = miw::ToJson(*r.distances, g.digits);
    json report = entry;
    report["schema_version"] = miw::kSchemaVersion;
    report["kind"] = "sweep_row";
    miw::WriteFileAtomically(dir / ("report_N" + std::to_string(r.n) + ".json"), miw::DumpDocument(report));
    list.push_back(std::move(entry));
  }
  const std::string csv = SweepCsv(rows, g.digits);
  miw::WriteFileAtomically(dir / "sweep.csv", csv);

  std::vector<double> ns, dws;
  for (const auto& r : rows) {
    if (r.distances) {
      ns.push_back(static_cast<double>(r.n));
      dws.push_back(r.distances->dw_to_normal);
    }
  }
  if (g.csv) {
    std::cout << csv;
  } else {
    json doc = {{"schema_version", miw::kSchemaVersion},
                {"kind", "sweep_report"},
                {"rows", std::move(list)},
                {"combined_csv", "sweep.csv"},
                {"all_ok", all_ok}};
    if (ns.size() >= 2) doc["dw_loglog_slope"] = miw::FormatReal(miw::LogLogSlope(ns, dws), g.digits);
    AddMetadata(doc, g);
    std::cout << miw::DumpDocument(doc);
  }
  if (!all_ok) {
    json failed = json::array();
    for (const auto& r : rows) {
      if (!r.ok()) failed.push_back(r.n);
    }
    PrintError("invariant", "sweep rows failed", kExitInvariant, {{"failed_N", failed}});
    return kExitInvariant;
  }
  return kExitOk;
}

// ---- ou ----

struct OuArgs {
  bool normal = false;
  std::size_t n = 0;
  std::size_t m = 0;
  double horizon = 0;
  std::size_t reps = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::vector<double> lags{0.5, 1.0, 2.0};
  bool no_solve = false;
  int precision = 0;
};

int RunOu(const OuArgs& a, const Globals& g) {
  if (a.normal == (a.n != 0)) throw miw::Error(miw::ErrorKind::kInvalidInput, "give exactly one of --normal or --n");
  if (a.reps < 2) throw miw::Error(miw::ErrorKind::kInvalidInput, "--reps must be >= 2");

  miw::ChainSource source = miw::ChainSource::StandardNormal();
  if (!a.normal) {
    if (a.n < 3) throw miw::Error(miw::ErrorKind::kInvalidInput, "N must be ≥ 3");
    const miw::SolutionCache cache = MakeCache(g);
    miw::SolverOptions opts;
    opts.precision_digits = a.precision;
    const int digits = a.precision > 0 ? a.precision : miw::DefaultPrecisionDigits(a.n);
    std::optional<miw::Configuration> cfg = cache.Load(a.n, digits);
    if (!cfg) {
      if (a.no_solve) {
        throw miw::Error(miw::ErrorKind::kMissingDependency,
                         "no cached configuration for N=" + std::to_string(a.n) + " in " + cache.directory().string());
      }
      cfg = cache.LoadOrSolve(a.n, opts).cfg;
    }
    source = miw::ChainSource::FromConfiguration(*cfg);
    if (!miw::WithinSlowGrowthRegime(a.m, a.n)) {
      Warn("m=" + std::to_string(a.m) + " exceeds the slow-growth regime m <= (log N)^(1/3) for N=" +
           std::to_string(a.n) + "; the OU limit is not guaranteed here");
    }
  }

  std::vector<double> lags;
  for (double t : a.lags) {
    if (t < a.horizon) {
      lags.push_back(t);
    } else {
      Warn("lag " + miw::FormatReal(t, g.digits) + " is not shorter than the horizon; skipped");
    }
  }

  const auto paths = miw::SimulatePaths(source, a.m, a.horizon, a.reps, a.seed);
  const miw::PathStatistics stats = miw::OuStatistics(paths, lags);
  const std::size_t steps = paths.front().sums.size() - 1;
  const miw::TestResult mid = miw::MarginalKsAgainstAr1(paths, source, steps / 2, a.seed);
  const miw::TestResult end = miw::MarginalKsAgainstAr1(paths, source, steps, a.seed);

  const std::string source_name = a.normal ? "normal" : std::to_string(a.n);
  json header = {{"seed", a.seed},
                 {"m", a.m},
                 {"N", source_name},
                 {"T", miw::FormatReal(a.horizon, g.digits)},
                 {"reps", a.reps}};
  auto ks_json = [&](std::size_t k, const miw::TestResult& r) {
    return json{{"step", k},
                {"statistic", miw::FormatReal(r.statistic, g.digits)},
                {"p_value", miw::FormatReal(r.p_value, g.digits)}};
  };
  json doc = {{"schema_version", miw::kSchemaVersion},
              {"kind", "ou_report"},
              {"header", header},
              {"statistics", miw::ToJson(stats, g.digits)},
              {"ar1_marginal_ks", json::array({ks_json(steps / 2, mid), ks_json(steps, end)})},
              {"within_slow_growth_regime", a.normal || miw::WithinSlowGrowthRegime(a.m, a.n)}};
  AddMetadata(doc, g);
  std::cout << miw::DumpDocument(doc);

  if (!a.out.empty()) {
    const std::string comment = "seed=" + std::to_string(a.seed) + " m=" + std::to_string(a.m) + " N=" + source_name +
                                " T=" + miw::FormatReal(a.horizon, g.digits) + " reps=" + std::to_string(a.reps);
    miw::WriteFileAtomically(a.out, miw::PathsCsv(paths, comment, g.digits));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ground states of the many-interacting-worlds oscillator"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--stable-output", g.stable_output, "Omit timestamps and timings so reruns are byte-identical");
  app.add_option("--cache-dir", g.cache_dir, "Solution cache directory")->envname("MIW_CACHE_DIR");
  app.add_option("--digits", g.digits, "Significant digits in reports")->check(CLI::Range(1, 200));

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve the ground state for N worlds");
  solve->add_option("--n", solve_args.n, "Number of worlds")->required();
  solve->add_option("--precision", solve_args.precision, "Working precision in decimal digits (0: automatic)");
  solve->add_option("--out", solve_args.out, "Write the configuration here and print a summary");
  solve->add_flag("--no-cache", solve_args.no_cache, "Bypass the solution cache");

  FileArgs verify_args, density_args, distance_args;
  auto add_file_command = [&](const char* name, const char* help, FileArgs& args) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("file", args.file, "Configuration document")->required();
    cmd->add_option("--tol", args.tol, "Property tolerance");
    cmd->add_option("--out", args.out, "Write the report here instead of standard output");
    cmd->add_flag("--csv", g.csv, "Emit CSV instead of JSON");
    return cmd;
  };
  auto* verify = add_file_command("verify", "Check the ground-state properties of a configuration", verify_args);
  auto* density = add_file_command("density", "Zero-bias density of a configuration", density_args);
  auto* distance = add_file_command("distance", "Distances to the normal law", distance_args);

  RootsArgs roots_args;
  auto* roots = app.add_subcommand("roots", "Largest roots a_n of x_n and b_n of S_n");
  roots->add_option("--n", roots_args.n, "Number of worlds")->required();
  roots->add_option("--precision", roots_args.precision, "Working precision in decimal digits (0: automatic)");
  roots->add_option("--out", roots_args.out, "Write the report here instead of standard output");
  roots->add_flag("--csv", g.csv, "Emit CSV instead of JSON");

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand("sweep", "Solve, verify and measure over a list of N");
  sweep->add_option("--n-list", sweep_args.n_list, "Values of N")->required()->delimiter(',');
  sweep->add_option("--out-dir", sweep_args.out_dir, "Directory for per-N reports and sweep.csv")->required();
  sweep->add_option("--precision", sweep_args.precision, "Working precision in decimal digits (0: automatic)");
  sweep->add_option("--tol", sweep_args.tol, "Property tolerance");
  sweep->add_flag("--csv", g.csv, "Print the combined CSV instead of JSON");

  OuArgs ou_args;
  auto* ou = app.add_subcommand("ou", "Simulate the rescaled single-replacement chain");
  ou->add_flag("--normal", ou_args.normal, "Draw replacements from N(0, 1)");
  ou->add_option("--n", ou_args.n, "Draw replacements from the N-world ground state");
  ou->add_option("--m", ou_args.m, "Sample size")->required()->check(CLI::PositiveNumber);
  ou->add_option("--t", ou_args.horizon, "Time horizon")->required()->check(CLI::PositiveNumber);
  ou->add_option("--reps", ou_args.reps, "Replications")->required();
  ou->add_option("--seed", ou_args.seed, "Random seed")->required();
  ou->add_option("--out", ou_args.out, "Write the paths as CSV");
  ou->add_option("--lags", ou_args.lags, "Autocorrelation lags in time units")->delimiter(',');
  ou->add_option("--precision", ou_args.precision, "Working precision for a solved source (0: automatic)");
  ou->add_flag("--no-solve", ou_args.no_solve, "Fail instead of solving a configuration missing from the cache");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    PrintError("usage", e.what(), kExitUsage);
    return kExitUsage;
  }

  try {
    if (*solve) return RunSolve(solve_args, g);
    if (*verify) return RunVerify(verify_args, g);
    if (*density) return RunDensity(density_args, g);
    if (*distance) return RunDistance(distance_args, g);
    if (*roots) return RunRoots(roots_args, g);
    if (*sweep) return RunSweep(sweep_args, g);
    if (*ou) return RunOu(ou_args, g);
  } catch (const miw::Error& e) {
    return Fail(e);
  } catch (const fs::filesystem_error& e) {
    PrintError("io", e.what(), kExitFailure);
    return kExitFailure;
  } catch (const std::exception& e) {
    PrintError("internal", e.what(), kExitFailure);
    return kExitFailure;
  }
  return kExitUsage;
}
