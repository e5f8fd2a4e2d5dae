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

#include "miw/config_io.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "miw/error.hpp"

namespace miw {

namespace {

[[noreturn]] void SchemaError(const std::string& what) { throw Error(ErrorKind::kSchema, what); }

const nlohmann::json& Field(const nlohmann::json& doc, const char* name) {
  auto it = doc.find(name);
  if (it == doc.end()) SchemaError(std::string("missing field '") + name + "'");
  return *it;
}

std::size_t CountField(const nlohmann::json& doc, const char* name) {
  const auto& v = Field(doc, name);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    SchemaError(std::string("field '") + name + "' must be a non-negative integer");
  }
  return v.get<std::size_t>();
}

Real DecimalField(const nlohmann::json& v, int digits, const std::string& where) {
  if (!v.is_string()) SchemaError(where + " must be a decimal string");
  try {
    return Real(v.get<std::string>(), digits);
  } catch (const std::invalid_argument&) {
    SchemaError(where + " is not a decimal number");
  }
}

}  // namespace

nlohmann::json ConfigurationToJson(const Configuration& cfg) {
  nlohmann::json values = nlohmann::json::array();
  for (const Real& v : cfg.exact_values) values.push_back(v.to_string(cfg.precision_digits));
  return {
      {"schema_version", kSchemaVersion},
      {"kind", "configuration"},
      {"N", cfg.n},
      {"precision_digits", cfg.precision_digits},
      {"residual", cfg.residual.to_string(cfg.precision_digits)},
      {"solver_iterations", cfg.solver_iterations},
      {"values", std::move(values)},
  };
}

Configuration ConfigurationFromJson(const nlohmann::json& doc) {
  if (!doc.is_object()) SchemaError("configuration document must be a JSON object");
  const std::size_t version = CountField(doc, "schema_version");
  if (version != static_cast<std::size_t>(kSchemaVersion)) {
    SchemaError("unsupported schema_version " + std::to_string(version));
  }
  if (Field(doc, "kind") != "configuration") {
    SchemaError("document kind is not 'configuration'");
  }
  const std::size_t n = CountField(doc, "N");
  const std::size_t digits = CountField(doc, "precision_digits");
  if (digits < 1 || digits > 100000) SchemaError("precision_digits out of range");
  const auto& values = Field(doc, "values");
  if (!values.is_array()) SchemaError("'values' must be an array");
  if (values.size() != n) SchemaError("'values' has " + std::to_string(values.size()) + " entries, N is " + std::to_string(n));
  if (n < 3) SchemaError("N must be >= 3");

  const int d = static_cast<int>(digits);
  std::vector<Real> exact;
  exact.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    exact.push_back(DecimalField(values[i], d, "values[" + std::to_string(i) + "]"));
    if (!exact.back().is_finite()) SchemaError("values[" + std::to_string(i) + "] is not finite");
  }
  Configuration cfg = Configuration::FromExact(std::move(exact), d);
  cfg.residual = DecimalField(Field(doc, "residual"), d, "residual");
  if (auto it = doc.find("solver_iterations"); it != doc.end()) {
    if (!it->is_number_integer()) SchemaError("'solver_iterations' must be an integer");
    cfg.solver_iterations = it->get<int>();
  }
  return cfg;
}

std::string DumpDocument(const nlohmann::json& doc) { return doc.dump(2) + "\n"; }

}  // namespace miw
