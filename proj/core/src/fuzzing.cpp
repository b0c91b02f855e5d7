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

#include "mhqmo/fuzzing.hpp"

#include <array>
#include <cmath>
#include <string>

#include "mhqmo/eigen.hpp"
#include "mhqmo/error.hpp"
#include "mhqmo/pauli.hpp"

namespace mhqmo {

FuzzParameter::FuzzParameter(double eta) : eta_(eta) {
  if (!(eta >= 0.0 && eta <= 1.0)) {
    throw Error(ErrorKind::InvalidEta,
                "eta " + std::to_string(eta) + " outside [0, 1]");
  }
}

QmoFamily fuzzify(const QmoFamily& family, FuzzParameter eta) {
  QmoFamily out = family;
  if (eta.value() == 1.0) return out;

  qubit_count(family.space_dim);
  out.eta = family.eta * eta.value();

  // Highest possible weight is 2 per qubit.
  std::array<double, 33> powers{};
  powers[0] = 1.0;
  for (std::size_t k = 1; k < powers.size(); ++k) powers[k] = powers[k - 1] * eta.value();

  for (auto& e : out.elements) {
    PauliExpansion exp = pauli_decompose(e.matrix);
    for (auto& [s, c] : exp.terms) c *= powers[static_cast<std::size_t>(s.weight())];
    e.matrix = pauli_reconstruct(exp);
  }
  return out;
}

CMatrix MarginalPovm::element_sum() const {
  CMatrix s = elements.empty() ? CMatrix() : CMatrix(elements.front().matrix.dim());
  for (const auto& e : elements) s += e.matrix;
  return s;
}

MarginalPovm extract_marginal_povm(const QmoFamily& family, std::size_t index,
                                   double slack) {
  const std::size_t keep[] = {index};
  const QmoFamily m = marginalize(family, keep);

  MarginalPovm povm{index, family.eta, {}};
  for (const auto& e : m.elements) {
    const double lowest = min_eigenvalue(e.matrix);
    if (lowest < -slack) {
      throw Error(ErrorKind::NotPositive,
                  "marginal element for outcome " + std::to_string(e.outcome[0]) +
                      " has eigenvalue " + std::to_string(lowest));
    }
    povm.elements.push_back({e.outcome[0], e.matrix});
  }
  return povm;
}

}  // namespace mhqmo
