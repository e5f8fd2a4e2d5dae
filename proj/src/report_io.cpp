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

#include "miw/report_io.hpp"

#include <cstdio>
#include <sstream>

namespace miw {

std::string FormatReal(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

nlohmann::json ToJson(const PropertyReport& r, int digits) {
  nlohmann::json failures = r.Failures();
  return {
      {"kind", "property_report"},
      {"N", r.n},
      {"tolerance", FormatReal(r.tolerance, digits)},
      {"sum", FormatReal(r.sum, digits)},
      {"sum_of_squares_minus", FormatReal(r.sum_of_squares_minus, digits)},
      {"max_symmetry_defect", FormatReal(r.max_symmetry_defect, digits)},
      {"monotone", r.monotone},
      {"mesh", FormatReal(r.mesh, digits)},
      {"mesh_bound", FormatReal(r.mesh_bound, digits)},
      {"x1_lower_bound", FormatReal(r.x1_lower_bound, digits)},
      {"x1_lower_bound_ok", r.x1_lower_bound_ok},
      {"passed", r.passed()},
      {"failures", std::move(failures)},
  };
}

nlohmann::json ToJson(const HamiltonianReport& r, int digits) {
  return {
      {"kind", "hamiltonian_report"},
      {"V", FormatReal(r.potential, digits)},
      {"U", FormatReal(r.interworld, digits)},
      {"H", FormatReal(r.total, digits)},
      {"ground_state_energy", FormatReal(r.ground_state_energy, digits)},
      {"defect", FormatReal(r.defect, digits)},
  };
}

nlohmann::json ToJson(const DistanceReport& r, int digits) {
  return {
      {"kind", "distance_report"},
      {"N", r.n},
      {"x1", FormatReal(r.x1, digits)},
      {"dW_to_normal", FormatReal(r.dw_to_normal, digits)},
      {"dW_empirical_to_zerobias", FormatReal(r.dw_empirical_to_zero_bias, digits)},
      {"stein_upper", FormatReal(r.stein_upper, digits)},
      {"sawtooth_lower", FormatReal(r.sawtooth_lower, digits)},
      {"mesh", FormatReal(r.mesh, digits)},
      {"mesh_upper", FormatReal(r.mesh_upper, digits)},
      {"ks_to_normal", FormatReal(r.ks_to_normal, digits)},
      {"sup_density_gap", FormatReal(r.sup_density_gap, digits)},
      {"bounds_hold", r.BoundsHold()},
  };
}

namespace {

nlohmann::json EstimateJson(const Estimate& e, int digits) {
  return {{"value", FormatReal(e.value, digits)}, {"standard_error", FormatReal(e.standard_error, digits)}};
}

}  // namespace

nlohmann::json ToJson(const PathStatistics& s, int digits) {
  nlohmann::json acf = nlohmann::json::array();
  for (const auto& lc : s.autocorrelation) {
    acf.push_back({{"lag_time", FormatReal(lc.lag_time, digits)},
                   {"lag_steps", lc.lag_steps},
                   {"estimate", EstimateJson(lc.estimate, digits)},
                   {"reference", FormatReal(lc.reference, digits)}});
  }
  return {
      {"kind", "path_statistics"},
      {"m", s.m},
      {"steps", s.steps},
      {"reps", s.reps},
      {"stationary_variance", EstimateJson(s.stationary_variance, digits)},
      {"stationary_variance_reference", FormatReal(1.0, digits)},
      {"early_window_variance", EstimateJson(s.early_variance, digits)},
      {"late_window_variance", EstimateJson(s.late_variance, digits)},
      {"autocorrelation", std::move(acf)},
      {"lag1_sum_corr", EstimateJson(s.lag1_sum_corr, digits)},
      {"lag1_reference", FormatReal(s.lag1_reference, digits)},
  };
}

nlohmann::json QuantileRowsToJson(const std::vector<QuantileRow>& rows, int digits) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& row : rows) {
    out.push_back({{"n", row.index},
                   {"x", FormatReal(row.value, digits)},
                   {"q", FormatReal(row.quantile, digits)},
                   {"deviation", FormatReal(row.deviation, digits)}});
  }
  return out;
}

nlohmann::json DensityToJson(const ZeroBiasDensity& d, int digits) {
  nlohmann::json intervals = nlohmann::json::array();
  for (std::size_t i = d.intervals(); i-- > 0;) {
    intervals.push_back({{"interval_left", FormatReal(d.lower(i), digits)},
                         {"interval_right", FormatReal(d.upper(i), digits)},
                         {"height", FormatReal(d.heights[i], digits)},
                         {"mass", FormatReal(d.masses[i], digits)}});
  }
  return {{"kind", "zero_bias_density"},
          {"N", d.breakpoints.size()},
          {"total_mass", FormatReal(d.TotalMass(), digits)},
          {"intervals", std::move(intervals)}};
}

std::string PropertyCsvHeader() {
  return "N,sum,sum_of_squares_minus,max_symmetry_defect,monotone,mesh,mesh_bound,x1_lower_bound_ok,V,U,H,"
         "hamiltonian_defect\n";
}

std::string PropertyCsvRow(const PropertyReport& r, const HamiltonianReport& h, int digits) {
  std::ostringstream os;
  os << r.n << ',' << FormatReal(r.sum, digits) << ',' << FormatReal(r.sum_of_squares_minus, digits) << ','
     << FormatReal(r.max_symmetry_defect, digits) << ',' << (r.monotone ? "true" : "false") << ','
     << FormatReal(r.mesh, digits) << ',' << FormatReal(r.mesh_bound, digits) << ','
     << (r.x1_lower_bound_ok ? "true" : "false") << ',' << FormatReal(h.potential, digits) << ','
     << FormatReal(h.interworld, digits) << ',' << FormatReal(h.total, digits) << ',' << FormatReal(h.defect, digits)
     << '\n';
  return os.str();
}

std::string DistanceCsvHeader() {
  return "N,x1,dW_to_normal,dW_empirical_to_zerobias,stein_upper,sawtooth_lower,mesh,mesh_upper,ks_to_normal,"
         "sup_density_gap\n";
}

std::string DistanceCsvRow(const DistanceReport& r, int digits) {
  std::ostringstream os;
  os << r.n << ',' << FormatReal(r.x1, digits) << ',' << FormatReal(r.dw_to_normal, digits) << ','
     << FormatReal(r.dw_empirical_to_zero_bias, digits) << ',' << FormatReal(r.stein_upper, digits) << ','
     << FormatReal(r.sawtooth_lower, digits) << ',' << FormatReal(r.mesh, digits) << ','
     << FormatReal(r.mesh_upper, digits) << ',' << FormatReal(r.ks_to_normal, digits) << ','
     << FormatReal(r.sup_density_gap, digits) << '\n';
  return os.str();
}

std::string DensityCsv(const ZeroBiasDensity& d, int digits) {
  std::ostringstream os;
  os << "interval_left,interval_right,height,mass\n";
  for (std::size_t i = d.intervals(); i-- > 0;) {
    os << FormatReal(d.lower(i), digits) << ',' << FormatReal(d.upper(i), digits) << ','
       << FormatReal(d.heights[i], digits) << ',' << FormatReal(d.masses[i], digits) << '\n';
  }
  return os.str();
}

std::string PathsCsv(std::span<const RescaledPath> paths, const std::string& header_comment, int digits) {
  std::ostringstream os;
  os << "# " << header_comment << '\n' << "rep,k,t,Y,Xbar\n";
  for (std::size_t r = 0; r < paths.size(); ++r) {
    const auto& p = paths[r];
    for (std::size_t k = 0; k < p.sums.size(); ++k) {
      os << r << ',' << k << ',' << FormatReal(static_cast<double>(k) / static_cast<double>(p.m), digits) << ','
         << FormatReal(p.sums[k], digits) << ',' << FormatReal(p.rescaled[k], digits) << '\n';
    }
  }
  return os.str();
}

}  // namespace miw
