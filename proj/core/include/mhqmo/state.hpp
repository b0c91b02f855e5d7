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
#include <random>

#include "mhqmo/matrix.hpp"

namespace mhqmo {

inline constexpr double kTraceTol = 1e-11;
inline constexpr double kStatePositivityTol = 1e-10;

/// Validated density operator: Hermitian, unit trace, positive semidefinite.
class DensityMatrix {
 public:
  /// Throws NotHermitian or InvalidState.
  explicit DensityMatrix(CMatrix matrix);

  static DensityMatrix maximally_mixed(std::size_t dim);
  /// Qubit state (I + r.sigma) / 2; requires |r| <= 1.
  static DensityMatrix from_bloch(double rx, double ry, double rz);

  const CMatrix& matrix() const noexcept { return matrix_; }
  std::size_t dim() const noexcept { return matrix_.dim(); }

 private:
  CMatrix matrix_;
};

/// Random full-rank state from the Hilbert-Schmidt (Ginibre) ensemble.
DensityMatrix random_density_matrix(std::mt19937_64& rng, std::size_t dim);

}  // namespace mhqmo
