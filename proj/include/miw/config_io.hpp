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

#ifndef MIW_CONFIG_IO_HPP_
#define MIW_CONFIG_IO_HPP_

#include <string>

#include "json.hpp"
#include "miw/solver.hpp"

namespace miw {

inline constexpr int kSchemaVersion = 1;

// {schema_version, kind, N, precision_digits, residual, solver_iterations,
//  values}. Reals are decimal strings carrying every working digit.
nlohmann::json ConfigurationToJson(const Configuration& cfg);

// Throws Error(kSchema) on any structural problem. Invariants are not
// checked here.
Configuration ConfigurationFromJson(const nlohmann::json& doc);

std::string DumpDocument(const nlohmann::json& doc);

}  // namespace miw

#endif  // MIW_CONFIG_IO_HPP_
