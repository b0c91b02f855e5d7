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
#include <vector>

#include "mhqmo/matrix.hpp"
#include "mhqmo/qmo.hpp"

namespace mhqmo {

/// Minimum eigenvalue at or above -kPositivitySlack counts as positive
/// semidefinite.
inline constexpr double kPositivitySlack = 1e-10;

/// Unsharpness parameter, validated to lie in [0, 1].
class FuzzParameter {
 public:
  /// Throws InvalidEta.
  explicit FuzzParameter(double eta);
  double value() const noexcept { return eta_; }

 private:
  double eta_;
};

/// Scales every Pauli-string coefficient of every element by eta^weight,
/// with weights I -> 0, X, Z -> 1 and Y -> 2. Equivalent to substituting
/// sigma_x -> eta sigma_x, sigma_z -> eta sigma_z in the sharp elements.
///
/// The result carries eta = family.eta * eta; for a sharp input that is just
/// eta. eta == 1 returns the input unchanged. Requires a power-of-two space
/// dimension (DimNotPowerOfTwo otherwise), so qutrit families are fuzzified
/// in their two-qubit embedding.
QmoFamily fuzzify(const QmoFamily& family, FuzzParameter eta);

struct PovmElement {
  double outcome = 0.0;
  CMatrix matrix;
};

struct MarginalPovm {
  std::size_t observable_index = 0;
  double eta = 1.0;
  std::vector<PovmElement> elements;

  CMatrix element_sum() const;
};

/// Sums the family over every observable except `index` and checks that
/// the result is a POVM (throws NotPositive otherwise).
MarginalPovm extract_marginal_povm(const QmoFamily& family, std::size_t index,
                                   double slack = kPositivitySlack);

}  // namespace mhqmo
