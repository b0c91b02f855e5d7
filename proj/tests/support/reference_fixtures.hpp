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

// Closed-form QMO elements and marginal POVMs transcribed as literal
// matrices / Pauli sums. Used as fixtures for the numerical pipeline.

#include <cmath>
#include <numbers>

#include "mhqmo/matrix.hpp"
#include "support/oracles.hpp"

namespace mhqmo::testing {

/// Qubit element (1/4)(I + eta x sigma_x + eta z sigma_z) in matrix form.
inline CMatrix qubit_element(double x, double z, double eta) {
  return CMatrix{{1.0 + eta * z, eta * x}, {eta * x, 1.0 - eta * z}} * 0.25;
}

/// Sharp embedded qutrit elements as Pauli sums.
inline CMatrix qutrit_embedded_sharp(double x, double z) {
  const CMatrix ii = kron(id2(), id2());
  const CMatrix xx = kron(sx(), sx());
  const CMatrix yy = kron(sy(), sy());
  const CMatrix zz = kron(sz(), sz());
  const CMatrix xs = kron(id2(), sx()) + kron(sx(), id2());
  const CMatrix zs = kron(id2(), sz()) + kron(sz(), id2());
  const CMatrix xz = kron(sx(), sz()) + kron(sz(), sx());
  if (x == 0.0 && z == 0.0) return (ii - xx - zz - yy) * 0.25;
  if (z == 0.0) return (ii + xx + yy - zz + xs * x) * 0.125;
  if (x == 0.0) return (ii - xx + zz + yy + zs * z) * 0.125;
  return (ii + xx + zz - yy + zs * z + xs * x + xz * (x * z)) * (1.0 / 16.0);
}

/// Fuzzy embedded qutrit elements, with sigma_x -> eta sigma_x and
/// sigma_z -> eta sigma_z substituted term by term.
inline CMatrix qutrit_embedded(double x, double z, double eta) {
  const double e2 = eta * eta;
  const CMatrix ii = kron(id2(), id2());
  const CMatrix xx = kron(sx(), sx());
  const CMatrix yy = kron(sy(), sy());
  const CMatrix zz = kron(sz(), sz());
  const CMatrix xs = kron(id2(), sx()) + kron(sx(), id2());
  const CMatrix zs = kron(id2(), sz()) + kron(sz(), id2());
  const CMatrix xz = kron(sx(), sz()) + kron(sz(), sx());
  if (x == 0.0 && z == 0.0) return (ii - (xx + zz + yy * e2) * e2) * 0.25;
  if (z == 0.0) return (ii + (xx + yy * e2 - zz) * e2 + xs * (eta * x)) * 0.125;
  if (x == 0.0) return (ii - (xx - zz - yy * e2) * e2 + zs * (eta * z)) * 0.125;
  return (ii + (xx + zz - yy * e2) * e2 + zs * (eta * z) + xs * (eta * x) +
          xz * (e2 * x * z)) *
         (1.0 / 16.0);
}

/// Spin-1 block of the fuzzy qutrit elements.
inline CMatrix qutrit_block(double x, double z, double e) {
  const double r2 = std::numbers::sqrt2;
  const double e2 = e * e;
  if (x == 0.0 && z == 0.0) {
    return CMatrix{{1 - e2, 0, e2 * (e2 - 1)}, {0, 1 - e2 * e2, 0}, {e2 * (e2 - 1), 0, 1 - e2}} *
           0.25;
  }
  if (z == 0.0) {
    return CMatrix{{1 - e2, r2 * x * e, e2 * (1 - e2)},
                   {r2 * x * e, (1 + e2) * (1 + e2), r2 * x * e},
                   {e2 * (1 - e2), r2 * x * e, 1 - e2}} *
           0.125;
  }
  if (x == 0.0) {
    return CMatrix{{1 + 2 * z * e + e2, 0, -e2 * (1 + e2)},
                   {0, (e2 - 1) * (e2 - 1), 0},
                   {-e2 * (1 + e2), 0, 1 - 2 * z * e + e2}} *
           0.125;
  }
  return CMatrix{{1 + 2 * z * e + e2, r2 * x * e * (1 + z * e), e2 * (1 + e2)},
                 {r2 * x * e * (1 + z * e), 1 - e2 * e2, x * r2 * e * (1 - z * e)},
                 {e2 * (1 + e2), r2 * x * e * (1 - z * e), 1 - 2 * z * e + e2}} *
         (1.0 / 16.0);
}

/// Qutrit fuzzy POVM for the x component.
inline CMatrix qutrit_e(double x, double e) {
  const double r2 = std::numbers::sqrt2;
  const double e2 = e * e;
  if (x == 0.0) return CMatrix{{1, 0, -e2}, {0, 1 - e2, 0}, {-e2, 0, 1}} * 0.5;
  return CMatrix{{1, r2 * x * e, e2}, {r2 * x * e, 1 + e2, r2 * x * e}, {e2, r2 * x * e, 1}} *
         0.25;
}

/// Qutrit fuzzy POVM for the z component.
inline CMatrix qutrit_f(double z, double e) {
  const double e2 = e * e;
  if (z == 0.0) return CMatrix{{1 - e2, 0, 0}, {0, 1 + e2, 0}, {0, 0, 1 - e2}} * 0.5;
  return CMatrix{{1 + 2 * z * e + e2, 0, 0}, {0, 1 - e2, 0}, {0, 0, 1 - 2 * z * e + e2}} * 0.25;
}

/// Fuzzy two-qubit element; eta = 1 gives the sharp element.
inline CMatrix two_qubit_element(double x1, double z1, double x2, double z2, double eta) {
  const double e2 = eta * eta;
  return (kron(id2(), id2()) + (kron(sx(), id2()) * x1 + kron(sz(), id2()) * z1) * eta +
          (kron(id2(), sx()) * x2 + kron(id2(), sz()) * z2) * eta +
          (kron(sx(), sx()) * (x1 * x2) + kron(sz(), sz()) * (z1 * z2) +
           kron(sx(), sz()) * (x1 * z2) + kron(sz(), sx()) * (x2 * z1)) *
              e2 -
          kron(sy(), sy()) * (e2 * e2 * x1 * x2 * z1 * z2)) *
         (1.0 / 16.0);
}

/// Single-qubit marginal of the fuzzy two-qubit family, on qubit `which`.
inline CMatrix two_qubit_pair_marginal(int which, double x, double z, double eta) {
  const CMatrix ii = kron(id2(), id2());
  const CMatrix xs = which == 1 ? kron(sx(), id2()) : kron(id2(), sx());
  const CMatrix zs = which == 1 ? kron(sz(), id2()) : kron(id2(), sz());
  return (ii + (xs * x + zs * z) * eta) * 0.25;
}

}  // namespace mhqmo::testing
