// Copyright 2026 the nevk authors
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

#ifndef NEVK_SCENARIO_HPP
#define NEVK_SCENARIO_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "nevk/curve.hpp"
#include "nevk/nevanlinna.hpp"

namespace nevk {

using Json = nlohmann::ordered_json;

struct ScenarioHypersurface {
  std::string name;
  std::string formText;
  MultiForm form{0};
};

// A fully validated scenario document. Text fields keep the original
// strings so serialization round-trips.
struct Scenario {
  Int p;
  int ambientDim = 1;  // N
  CurveMode mode = CurveMode::Entire;
  std::vector<std::string> varietyText;
  std::vector<MultiForm> variety;
  std::optional<int> declaredDimension;
  std::vector<std::string> curveText;
  std::vector<Series> curveComponents;
  std::optional<Truncation> truncation;  // applied to every component
  std::vector<ScenarioHypersurface> hypersurfaces;
  std::vector<Rat> samples;  // defaults to 0..4
  long cap = 0;              // 0: module default

  // Reduces the representation (polynomial input) or passes the asserted
  // truncated one through.
  AnalyticCurve curve() const;
  // Computes the dimension and checks any declared value.
  VarietyContext context() const;
};

// UTF-8 JSON with rationals as strings. Throws ParseError with a field
// path on semantic errors.
Scenario parseScenario(const std::string& document);
std::string serializeScenario(const Scenario& sc);

enum class Command {
  Polygon,
  FmtCheck,
  GeneralPosition,
  Certificates,
  DefectReport,
  Verify,
};
Command commandFromString(const std::string& name);

struct Report {
  Json machine;      // deterministic machine-readable form
  std::string text;  // human-readable form
  int exitCode;      // 0 pass, 1 verdict failure, 2 error
};

Json piecewiseToJson(const PiecewiseLinear& f);

// Runs one command. Parse/shape/cap problems surface as exit code 2
// inside the report; mathematical verdict failures as exit code 1.
Report runScenario(const Scenario& sc, Command command);

}  // namespace nevk

#endif  // NEVK_SCENARIO_HPP
