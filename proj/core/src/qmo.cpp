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

#include "mhqmo/qmo.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "mhqmo/error.hpp"

namespace mhqmo {

namespace {

std::size_t common_dim(std::span<const Observable> observables) {
  if (observables.empty()) {
    throw Error(ErrorKind::InvalidArgument, "at least one observable is required");
  }
  const std::size_t dim = observables.front().dim();
  for (const auto& o : observables) {
    if (o.dim() != dim) {
      throw Error(ErrorKind::DimMismatch, "observables act on different spaces");
    }
  }
  return dim;
}

CMatrix group_projector(std::span<const Observable> observables,
                        const std::vector<std::size_t>& group, const Outcome& outcome) {
  CMatrix p = observables[group.front()].projector(outcome[group.front()]);
  for (std::size_t k = 1; k < group.size(); ++k)
    p = p * observables[group[k]].projector(outcome[group[k]]);
  return p;
}

}  // namespace

const CMatrix& QmoFamily::at(const Outcome& outcome) const {
  for (const auto& e : elements)
    if (e.outcome == outcome) return e.matrix;
  throw Error(ErrorKind::UnknownLabel, "outcome tuple not in family");
}

CMatrix QmoFamily::element_sum() const {
  CMatrix s(space_dim);
  for (const auto& e : elements) s += e.matrix;
  return s;
}

std::vector<Outcome> outcome_tuples(std::span<const Observable> observables) {
  const std::size_t n = observables.size();
  std::vector<std::vector<double>> labels;
  labels.reserve(n);
  std::size_t total = 1;
  for (const auto& o : observables) {
    labels.push_back(o.labels());
    total *= labels.back().size();
  }
  std::vector<Outcome> out;
  out.reserve(total);
  std::vector<std::size_t> digit(n, 0);
  for (std::size_t t = 0; t < total; ++t) {
    Outcome o(n);
    for (std::size_t k = 0; k < n; ++k) o[k] = labels[k][digit[k]];
    out.push_back(std::move(o));
    for (std::size_t k = 0; k < n; ++k) {
      if (++digit[k] < labels[k].size()) break;
      digit[k] = 0;
    }
  }
  return out;
}

Grouping singleton_grouping(std::size_t count) {
  Grouping g(count);
  for (std::size_t k = 0; k < count; ++k) g[k] = {k};
  return g;
}

void validate_grouping(const Grouping& grouping, std::size_t count) {
  if (grouping.empty()) {
    throw Error(ErrorKind::InvalidArgument, "grouping must contain at least one group");
  }
  std::vector<int> seen(count, 0);
  for (const auto& group : grouping) {
    if (group.empty()) throw Error(ErrorKind::InvalidArgument, "empty group in grouping");
    for (std::size_t idx : group) {
      if (idx >= count) {
        throw Error(ErrorKind::InvalidArgument,
                    "group index " + std::to_string(idx) + " out of range");
      }
      ++seen[idx];
    }
  }
  for (std::size_t k = 0; k < count; ++k) {
    if (seen[k] != 1) {
      throw Error(ErrorKind::InvalidArgument,
                  "observable " + std::to_string(k) + " must appear in exactly one group");
    }
  }
}

QmoFamily qmo_jordan(std::vector<Observable> observables, Grouping grouping) {
  const std::size_t dim = common_dim(observables);
  validate_grouping(grouping, observables.size());

  for (const auto& group : grouping)
    for (std::size_t a = 0; a < group.size(); ++a)
      for (std::size_t b = a + 1; b < group.size(); ++b) {
        const double c = commutator(observables[group[a]].matrix,
                                    observables[group[b]].matrix).max_abs();
        if (c > kCommuteTol) {
          throw Error(ErrorKind::NonCommutingGroup,
                      "observables " + std::to_string(group[a]) + " and " +
                          std::to_string(group[b]) + " share a group but do not commute");
        }
      }

  const std::size_t g = grouping.size();
  double factorial = 1.0;
  for (std::size_t k = 2; k <= g; ++k) factorial *= static_cast<double>(k);

  QmoFamily fam{std::move(observables), std::move(grouping), 1.0, dim, {}};
  for (auto& outcome : outcome_tuples(fam.observables)) {
    std::vector<CMatrix> parts;
    parts.reserve(g);
    for (const auto& group : fam.grouping)
      parts.push_back(group_projector(fam.observables, group, outcome));

    std::vector<std::size_t> perm(g);
    std::iota(perm.begin(), perm.end(), 0);
    CMatrix sum(dim);
    do {
      CMatrix prod = parts[perm[0]];
      for (std::size_t k = 1; k < g; ++k) prod = prod * parts[perm[k]];
      sum += prod;
    } while (std::next_permutation(perm.begin(), perm.end()));

    fam.elements.push_back({std::move(outcome), sum * (1.0 / factorial)});
  }
  return fam;
}

QmoFamily marginalize(const QmoFamily& family, std::span<const std::size_t> keep) {
  if (keep.empty()) throw Error(ErrorKind::EmptyKeepSet, "keep set is empty");
  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw Error(ErrorKind::InvalidArgument, "keep set has duplicate indices");
  }
  if (kept.back() >= family.observables.size()) {
    throw Error(ErrorKind::InvalidArgument, "keep index out of range");
  }

  std::vector<std::size_t> remap(family.observables.size(), kept.size());
  for (std::size_t k = 0; k < kept.size(); ++k) remap[kept[k]] = k;

  QmoFamily out;
  out.eta = family.eta;
  out.space_dim = family.space_dim;
  for (std::size_t idx : kept) out.observables.push_back(family.observables[idx]);
  for (const auto& group : family.grouping) {
    std::vector<std::size_t> g;
    for (std::size_t idx : group)
      if (remap[idx] < kept.size()) g.push_back(remap[idx]);
    if (!g.empty()) out.grouping.push_back(std::move(g));
  }

  for (auto& outcome : outcome_tuples(out.observables))
    out.elements.push_back({std::move(outcome), CMatrix(out.space_dim)});

  for (const auto& e : family.elements) {
    Outcome reduced(kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k) reduced[k] = e.outcome[kept[k]];
    auto it = std::find_if(out.elements.begin(), out.elements.end(),
                           [&](const QmoElement& r) { return r.outcome == reduced; });
    it->matrix += e.matrix;
  }
  return out;
}

double QuasiProbTable::total() const {
  double s = 0.0;
  for (const auto& e : entries) s += e.p;
  return s;
}

QuasiProbTable quasiprob(const QmoFamily& family, const DensityMatrix& rho) {
  if (rho.dim() != family.space_dim) {
    throw Error(ErrorKind::DimMismatch,
                "state dimension " + std::to_string(rho.dim()) +
                    " does not match family dimension " + std::to_string(family.space_dim));
  }
  QuasiProbTable table{family.eta, {}};
  table.entries.reserve(family.elements.size());
  for (const auto& e : family.elements)
    table.entries.push_back({e.outcome, trace_of_product(rho.matrix(), e.matrix).real()});
  return table;
}

}  // namespace mhqmo
