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

namespace mhqmo {

/// Eigenvalues closer than this are merged into a single spectral point.
inline constexpr double kSpectralMergeTol = 1e-10;

struct SpectralPoint {
  double value = 0.0;
  CMatrix projector;
  std::size_t multiplicity = 0;
};

/// Hermitian operator together with its spectral resolution. Spectral points
/// are ordered by descending eigenvalue; their values are the outcome labels
/// used everywhere else.
struct Observable {
  CMatrix matrix;
  std::vector<SpectralPoint> spectrum;

  std::size_t dim() const noexcept { return matrix.dim(); }
  std::vector<double> labels() const;
  /// Projector for an exact label; throws UnknownLabel.
  const CMatrix& projector(double label) const;
  /// e^{i u H} assembled from the spectral projectors.
  CMatrix exp_i(double u) const;
};

/// Spectral decomposition of a Hermitian matrix. Eigenvalues within
/// kSpectralMergeTol of their cluster are merged; a merged value lying within
/// the same tolerance of an integer is snapped to it so that outcome labels
/// are exact.
Observable spectral(const CMatrix& m);

}  // namespace mhqmo
