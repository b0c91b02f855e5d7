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

#include "mhqmo/observable.hpp"

#include <cmath>
#include <string>

#include "mhqmo/eigen.hpp"
#include "mhqmo/error.hpp"

namespace mhqmo {

std::vector<double> Observable::labels() const {
  std::vector<double> out;
  out.reserve(spectrum.size());
  for (const auto& p : spectrum) out.push_back(p.value);
  return out;
}

const CMatrix& Observable::projector(double label) const {
  for (const auto& p : spectrum)
    if (p.value == label) return p.projector;
  throw Error(ErrorKind::UnknownLabel,
              "no spectral point with label " + std::to_string(label));
}

CMatrix Observable::exp_i(double u) const {
  CMatrix out(dim());
  for (const auto& p : spectrum) out += p.projector * std::polar(1.0, p.value * u);
  return out;
}

Observable spectral(const CMatrix& m) {
  const EigenSystem es = eig_hermitian(m);
  const std::size_t n = m.dim();

  Observable obs{m, {}};
  std::size_t k = 0;
  while (k < n) {
    std::size_t end = k + 1;
    while (end < n && es.values[end - 1] - es.values[end] <= kSpectralMergeTol) ++end;

    SpectralPoint point{0.0, CMatrix(n), end - k};
    double sum = 0.0;
    for (std::size_t c = k; c < end; ++c) {
      sum += es.values[c];
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          point.projector(i, j) += es.vectors(i, c) * std::conj(es.vectors(j, c));
    }
    double value = sum / static_cast<double>(end - k);
    const double nearest = std::round(value);
    if (std::abs(value - nearest) <= kSpectralMergeTol) value = nearest;
    point.value = value == 0.0 ? 0.0 : value;  // no negative zero labels
    obs.spectrum.push_back(std::move(point));
    k = end;
  }
  return obs;
}

}  // namespace mhqmo
