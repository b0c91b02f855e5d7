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

#include "mhqmo/charfn.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "mhqmo/error.hpp"

namespace mhqmo {

namespace {

void require_integer_spectra(std::span<const Observable> observables) {
  for (const auto& o : observables)
    for (double v : o.labels())
      if (v != std::round(v)) {
        throw Error(ErrorKind::NonIntegerSpectrum,
                    "label " + std::to_string(v) + " is not an integer");
      }
}

}  // namespace

CMatrix char_operator(std::span<const Observable> observables, const Grouping& grouping,
                      std::span<const double> u) {
  if (observables.empty()) {
    throw Error(ErrorKind::InvalidArgument, "at least one observable is required");
  }
  if (u.size() != observables.size()) {
    throw Error(ErrorKind::DimMismatch, "need one frequency per observable");
  }
  validate_grouping(grouping, observables.size());
  require_integer_spectra(observables);

  const std::size_t dim = observables.front().dim();
  std::vector<CMatrix> parts;
  parts.reserve(grouping.size());
  for (const auto& group : grouping) {
    CMatrix e = observables[group.front()].exp_i(u[group.front()]);
    for (std::size_t k = 1; k < group.size(); ++k)
      e = e * observables[group[k]].exp_i(u[group[k]]);
    parts.push_back(std::move(e));
  }

  const std::size_t g = parts.size();
  std::vector<std::size_t> perm(g);
  std::iota(perm.begin(), perm.end(), 0);
  double count = 0.0;
  CMatrix sum(dim);
  do {
    CMatrix prod = parts[perm[0]];
    for (std::size_t k = 1; k < g; ++k) prod = prod * parts[perm[k]];
    sum += prod;
    count += 1.0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return sum * (1.0 / count);
}

Complex char_function(std::span<const Observable> observables, const Grouping& grouping,
                      const DensityMatrix& rho, std::span<const double> u) {
  const CMatrix phi = char_operator(observables, grouping, u);
  if (phi.dim() != rho.dim()) {
    throw Error(ErrorKind::DimMismatch, "state dimension does not match observables");
  }
  return trace_of_product(rho.matrix(), phi);
}

QmoFamily qmo_from_charfn(std::vector<Observable> observables, Grouping grouping) {
  require_integer_spectra(observables);
  for (const auto& o : observables)
    for (double v : o.labels())
      if (v < -1.0 || v > 1.0) {
        throw Error(ErrorKind::UnsupportedSpectrum,
                    "label " + std::to_string(v) + " outside {-1, 0, +1}");
      }
  validate_grouping(grouping, observables.size());

  const std::size_t n = observables.size();
  const std::size_t dim = observables.front().dim();
  constexpr std::size_t kGrid = 3;
  const double step = 2.0 * std::numbers::pi / static_cast<double>(kGrid);

  std::size_t points = 1;
  for (std::size_t k = 0; k < n; ++k) points *= kGrid;

  // Tabulate Phi on the grid once; every outcome reuses it.
  std::vector<std::vector<double>> grid_u;
  std::vector<CMatrix> grid_phi;
  grid_u.reserve(points);
  grid_phi.reserve(points);
  std::vector<std::size_t> digit(n, 0);
  for (std::size_t t = 0; t < points; ++t) {
    std::vector<double> u(n);
    for (std::size_t k = 0; k < n; ++k) u[k] = step * static_cast<double>(digit[k]);
    grid_phi.push_back(char_operator(observables, grouping, u));
    grid_u.push_back(std::move(u));
    for (std::size_t k = 0; k < n; ++k) {
      if (++digit[k] < kGrid) break;
      digit[k] = 0;
    }
  }

  QmoFamily fam{std::move(observables), std::move(grouping), 1.0, dim, {}};
  const double norm = 1.0 / static_cast<double>(points);
  for (auto& outcome : outcome_tuples(fam.observables)) {
    CMatrix acc(dim);
    for (std::size_t t = 0; t < points; ++t) {
      double phase = 0.0;
      for (std::size_t k = 0; k < n; ++k) phase -= outcome[k] * grid_u[t][k];
      acc += grid_phi[t] * std::polar(1.0, phase);
    }
    fam.elements.push_back({std::move(outcome), acc * norm});
  }
  return fam;
}

}  // namespace mhqmo
