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

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mhqmo/fuzzing.hpp"
#include "mhqmo/qmo.hpp"

namespace mhqmo {

/// eta -> family at that unsharpness.
using FamilyBuilder = std::function<QmoFamily(double)>;

/// Positivity of every QMO element is sufficient for joint measurability but
/// not necessary, so the negative outcome means "not certified", never
/// "incompatible".
enum class Verdict { CompatibleBySufficientCondition, NotCertified };

/// "compatible-by-sufficient-condition" | "not-certified"
std::string_view to_string(Verdict v) noexcept;

/// Minimum over elements of the minimum eigenvalue.
double family_min_eigenvalue(const QmoFamily& family);

Verdict verdict(const QmoFamily& family, double slack = kPositivitySlack);

struct CurvePoint {
  double eta = 0.0;
  double min_eig = 0.0;
};

/// `steps` equally spaced points from lo to hi inclusive. Requires
/// 0 <= lo < hi <= 1 and steps >= 2 (InvalidArgument).
std::vector<double> uniform_grid(double lo, double hi, std::size_t steps);

/// Evaluates the family minimum eigenvalue at each grid point. The grid must
/// be non-empty, strictly increasing and inside [0, 1].
std::vector<CurvePoint> min_eig_curve(const FamilyBuilder& builder,
                                      std::span<const double> grid);

struct ThresholdOptions {
  double lo = 0.0;
  double hi = 1.0;
  /// Bracket width at which bisection stops.
  double tolerance = 1e-12;
  double slack = kPositivitySlack;
  std::size_t prescan_points = 101;
};

/// Largest certified eta: the point where the family minimum eigenvalue
/// first drops below -slack on [lo, hi].
///
/// A pre-scan checks that positivity is lost exactly once; a second change
/// of sign raises SignChangeViolation instead of returning a misleading
/// root. Returns nullopt when the family is positive on the whole bracket.
/// Throws NotPositiveAtZero if it is not positive at `lo`.
std::optional<double> threshold(const FamilyBuilder& builder,
                                const ThresholdOptions& options = {});

struct CompatReport {
  std::string scenario;
  std::vector<CurvePoint> grid;
  std::optional<double> threshold;
};

CompatReport analyze(std::string scenario, const FamilyBuilder& builder,
                     std::span<const double> grid, const ThresholdOptions& options = {});

}  // namespace mhqmo
