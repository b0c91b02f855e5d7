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

#include <vector>

#include "mhqmo/matrix.hpp"

namespace mhqmo {

struct EigenSystem {
  /// Sorted descending.
  std::vector<double> values;
  /// Column k is the unit eigenvector for values[k].
  CMatrix vectors;
};

struct JacobiOptions {
  /// Stop once the off-diagonal Frobenius norm is at most
  /// `relative_tolerance * ||M||_F`.
  double relative_tolerance = 1e-14;
  int max_sweeps = 100;
};

/// Cyclic Jacobi diagonalization of a Hermitian matrix.
///
/// Each (p, q) rotation first removes the phase of M_pq and then applies a
/// real Givens rotation, so the accumulated transform stays unitary. Ties in
/// the eigenvalues keep the order in which they leave the sweep (stable
/// sort). Throws NotHermitian when the defect exceeds kHermitianTol and
/// NoConvergence if the sweep budget is exhausted.
EigenSystem eig_hermitian(const CMatrix& m, const JacobiOptions& options = {});

/// Eigenvalues only, sorted descending.
std::vector<double> eigvals_hermitian(const CMatrix& m);

/// Smallest eigenvalue of a Hermitian matrix.
double min_eigenvalue(const CMatrix& m);

}  // namespace mhqmo
