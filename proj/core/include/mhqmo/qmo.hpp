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
#include <span>
#include <vector>

#include "mhqmo/matrix.hpp"
#include "mhqmo/observable.hpp"
#include "mhqmo/state.hpp"

namespace mhqmo {

/// One eigenvalue label per observable, in observable order.
using Outcome = std::vector<double>;

/// Partition of observable indices into mutually commuting groups. The
/// symmetrization runs over permutations of groups, not of individual
/// observables; a grouping of singletons gives the full n! Margenau-Hill
/// symmetrization.
using Grouping = std::vector<std::vector<std::size_t>>;

/// Within-group commutators must vanish to this tolerance (max-entry).
inline constexpr double kCommuteTol = 1e-10;

struct QmoElement {
  Outcome outcome;
  CMatrix matrix;
};

/// Quasi-measurement operator family: one Hermitian element per outcome
/// tuple, summing to the identity.
///
/// Elements are stored in canonical order: every observable's labels run in
/// descending order and the first observable varies fastest.
struct QmoFamily {
  std::vector<Observable> observables;
  Grouping grouping;
  double eta = 1.0;
  std::size_t space_dim = 0;
  std::vector<QmoElement> elements;

  /// Throws UnknownLabel if the tuple is not an outcome of this family.
  const CMatrix& at(const Outcome& outcome) const;
  CMatrix element_sum() const;
};

/// Cartesian product of the observables' labels in canonical order.
std::vector<Outcome> outcome_tuples(std::span<const Observable> observables);

/// {{0}, {1}, ..., {n-1}}
Grouping singleton_grouping(std::size_t count);

/// Checks that `grouping` partitions [0, count); throws InvalidArgument.
void validate_grouping(const Grouping& grouping, std::size_t count);

/// Sharp (eta = 1) Margenau-Hill QMO built from symmetrized products of
/// spectral projectors.
///
/// For an outcome tuple each group contributes the ordinary product of its
/// members' projectors; the element is the average of the g! orderings of
/// those g group projectors. With two groups this is the Jordan product
/// (P Q + Q P) / 2. Throws NonCommutingGroup when members of one group fail
/// to commute.
QmoFamily qmo_jordan(std::vector<Observable> observables, Grouping grouping);

/// Sums out every observable not listed in `keep`. Kept indices are
/// processed in ascending order; the grouping is restricted accordingly.
QmoFamily marginalize(const QmoFamily& family, std::span<const std::size_t> keep);

struct QuasiProbEntry {
  Outcome outcome;
  double p = 0.0;
};

struct QuasiProbTable {
  double eta = 1.0;
  std::vector<QuasiProbEntry> entries;

  double total() const;
};

/// P(outcome) = Re Tr[rho G(outcome)]. Throws DimMismatch.
QuasiProbTable quasiprob(const QmoFamily& family, const DensityMatrix& rho);

}  // namespace mhqmo
