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

#include "mhqmo/state.hpp"

#include <cmath>
#include <string>

#include "mhqmo/eigen.hpp"
#include "mhqmo/error.hpp"

namespace mhqmo {

DensityMatrix::DensityMatrix(CMatrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.dim() == 0) {
    throw Error(ErrorKind::InvalidState, "density matrix must have dim >= 1");
  }
  const double defect = matrix_.hermiticity_defect();
  if (defect > kHermitianTol) {
    throw Error(ErrorKind::NotHermitian,
                "density matrix hermiticity defect " + std::to_string(defect));
  }
  const Complex tr = matrix_.trace();
  if (std::abs(tr - 1.0) > kTraceTol) {
    throw Error(ErrorKind::InvalidState,
                "density matrix trace " + std::to_string(tr.real()) + " is not 1");
  }
  const double lowest = min_eigenvalue(matrix_);
  if (lowest < -kStatePositivityTol) {
    throw Error(ErrorKind::InvalidState,
                "density matrix has negative eigenvalue " + std::to_string(lowest));
  }
}

DensityMatrix DensityMatrix::maximally_mixed(std::size_t dim) {
  return DensityMatrix(CMatrix::identity(dim) * (1.0 / static_cast<double>(dim)));
}

DensityMatrix DensityMatrix::from_bloch(double rx, double ry, double rz) {
  using namespace pauli_matrices;
  return DensityMatrix((I() + X() * rx + Y() * ry + Z() * rz) * 0.5);
}

DensityMatrix random_density_matrix(std::mt19937_64& rng, std::size_t dim) {
  std::normal_distribution<double> normal;
  CMatrix g(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) g(i, j) = Complex(normal(rng), normal(rng));
  CMatrix rho = g * g.adjoint();
  // Hermitize exactly before normalizing.
  rho = (rho + rho.adjoint()) * 0.5;
  return DensityMatrix(rho * (1.0 / rho.trace().real()));
}

}  // namespace mhqmo
