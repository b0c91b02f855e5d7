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

#include "mhqmo/compat.hpp"

#include <algorithm>
#include <limits>

#include "mhqmo/eigen.hpp"
#include "mhqmo/error.hpp"

namespace mhqmo {

std::string_view to_string(Verdict v) noexcept {
  return v == Verdict::CompatibleBySufficientCondition ? "compatible-by-sufficient-condition"
                                                       : "not-certified";
}

double family_min_eigenvalue(const QmoFamily& family) {
  double lowest = std::numeric_limits<double>::infinity();
  for (const auto& e : family.elements) lowest = std::min(lowest, min_eigenvalue(e.matrix));
  return lowest;
}

Verdict verdict(const QmoFamily& family, double slack) {
  return family_min_eigenvalue(family) >= -slack ? Verdict::CompatibleBySufficientCondition
                                                 : Verdict::NotCertified;
}

std::vector<double> uniform_grid(double lo, double hi, std::size_t steps) {
  if (!(lo >= 0.0 && hi <= 1.0 && lo < hi)) {
    throw Error(ErrorKind::InvalidArgument,
                "eta range must satisfy 0 <= min < max <= 1");
  }
  if (steps < 2) throw Error(ErrorKind::InvalidArgument, "eta range needs steps >= 2");
  std::vector<double> g(steps);
  const double span = hi - lo;
  const double last = static_cast<double>(steps - 1);
  for (std::size_t k = 0; k < steps; ++k) g[k] = lo + span * static_cast<double>(k) / last;
  g.back() = hi;
  return g;
}

std::vector<CurvePoint> min_eig_curve(const FamilyBuilder& builder,
                                      std::span<const double> grid) {
  if (grid.empty()) throw Error(ErrorKind::InvalidArgument, "eta grid is empty");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!(grid[k] >= 0.0 && grid[k] <= 1.0)) {
      throw Error(ErrorKind::InvalidEta, "grid point outside [0, 1]");
    }
    if (k > 0 && !(grid[k] > grid[k - 1])) {
      throw Error(ErrorKind::InvalidArgument, "eta grid must be strictly increasing");
    }
  }
  std::vector<CurvePoint> out;
  out.reserve(grid.size());
  for (double eta : grid) out.push_back({eta, family_min_eigenvalue(builder(eta))});
  return out;
}

std::optional<double> threshold(const FamilyBuilder& builder, const ThresholdOptions& options) {
  auto positive = [&](double eta) {
    return family_min_eigenvalue(builder(eta)) >= -options.slack;
  };

  const auto scan = min_eig_curve(
      builder, uniform_grid(options.lo, options.hi, std::max<std::size_t>(options.prescan_points, 2)));
  if (scan.front().min_eig < -options.slack) {
    throw Error(ErrorKind::NotPositiveAtZero,
                "family is not positive at the lower end of the bracket (min eigenvalue " +
                    std::to_string(scan.front().min_eig) + ")");
  }

  std::size_t first_negative = scan.size();
  for (std::size_t k = 1; k < scan.size(); ++k) {
    const bool pos = scan[k].min_eig >= -options.slack;
    if (first_negative == scan.size()) {
      if (!pos) first_negative = k;
    } else if (pos) {
      throw Error(ErrorKind::SignChangeViolation,
                  "minimum eigenvalue regains positivity at eta = " +
                      std::to_string(scan[k].eta) + " after failing at eta = " +
                      std::to_string(scan[first_negative].eta));
    }
  }
  if (first_negative == scan.size()) return std::nullopt;

  double a = scan[first_negative - 1].eta;
  double b = scan[first_negative].eta;
  while (b - a > options.tolerance) {
    const double mid = 0.5 * (a + b);
    if (mid <= a || mid >= b) break;
    if (positive(mid)) {
      a = mid;
    } else {
      b = mid;
    }
  }
  return 0.5 * (a + b);
}

CompatReport analyze(std::string scenario, const FamilyBuilder& builder,
                     std::span<const double> grid, const ThresholdOptions& options) {
  CompatReport report{std::move(scenario), min_eig_curve(builder, grid), std::nullopt};
  report.threshold = threshold(builder, options);
  return report;
}

}  // namespace mhqmo
