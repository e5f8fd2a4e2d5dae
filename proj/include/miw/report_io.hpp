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

#ifndef MIW_REPORT_IO_HPP_
#define MIW_REPORT_IO_HPP_

#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "miw/analysis.hpp"
#include "miw/metrics.hpp"
#include "miw/ou_chain.hpp"
#include "miw/zero_bias.hpp"

namespace miw {

// Every real in a report is written as a decimal string with this many
// significant digits.
inline constexpr int kReportDigits = 17;

std::string FormatReal(double value, int digits = kReportDigits);

nlohmann::json ToJson(const PropertyReport& r, int digits = kReportDigits);
nlohmann::json ToJson(const HamiltonianReport& r, int digits = kReportDigits);
nlohmann::json ToJson(const DistanceReport& r, int digits = kReportDigits);
nlohmann::json ToJson(const PathStatistics& s, int digits = kReportDigits);
nlohmann::json QuantileRowsToJson(const std::vector<QuantileRow>& rows, int digits = kReportDigits);
nlohmann::json DensityToJson(const ZeroBiasDensity& d, int digits = kReportDigits);

// One header line plus one row per configuration.
std::string PropertyCsvHeader();
std::string PropertyCsvRow(const PropertyReport& r, const HamiltonianReport& h, int digits = kReportDigits);
std::string DistanceCsvHeader();
std::string DistanceCsvRow(const DistanceReport& r, int digits = kReportDigits);

// interval_left,interval_right,height,mass in increasing x.
std::string DensityCsv(const ZeroBiasDensity& d, int digits = kReportDigits);

// rep,k,t,Y,Xbar with a leading '#' metadata line.
std::string PathsCsv(std::span<const RescaledPath> paths, const std::string& header_comment,
                     int digits = kReportDigits);

}  // namespace miw

#endif  // MIW_REPORT_IO_HPP_
