// Copyright 2026 The mhqmo Authors
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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mhqmo/compat.hpp"
#include "mhqmo/fuzzing.hpp"
#include "mhqmo/matrix.hpp"
#include "mhqmo/qmo.hpp"

namespace mhqmo {

/// Quasi-probabilities below this are reported as negative.
inline constexpr double kNegativeFlagTol = 1e-11;

/// Written numbers are rounded to this many significant digits so that
/// repeated runs produce identical bytes.
inline constexpr int kOutputDigits = 9;

/// Rounds to `digits` significant digits; -0 becomes 0.
double round_significant(double v, int digits = kOutputDigits);

/// {"dim": n, "entries": [[re, im], ...]} row-major.
nlohmann::ordered_json to_json(const CMatrix& m);
/// Throws ParseError on malformed input.
CMatrix cmatrix_from_json(const nlohmann::ordered_json& j);

/// {"eta": e, "outcomes": [[...], ...], "elements": [{"outcome": [...], "matrix": ...}]}
nlohmann::ordered_json to_json(const QmoFamily& family);
/// QmoFamily layout plus "observable_index".
nlohmann::ordered_json to_json(const MarginalPovm& povm);
/// {"eta": e, "entries": [{"outcome": [...], "p": v, "negative": true?}]}
nlohmann::ordered_json to_json(const QuasiProbTable& table);
/// {"scenario": s, "threshold": t | null, "grid": [{"eta": e, "min_eig": v}]}
nlohmann::ordered_json to_json(const CompatReport& report);

/// "eta,min_eig" header followed by one %.9e row per grid point.
std::string to_csv(const CompatReport& report);

struct ObservableSet {
  std::vector<CMatrix> matrices;
  std::optional<Grouping> grouping;
};

/// {"observables": [CMatrix-JSON, ...], "grouping": [[0], [1], ...]}; the
/// grouping is optional. Throws ParseError.
ObservableSet observable_set_from_json(const nlohmann::ordered_json& j);

}  // namespace mhqmo
