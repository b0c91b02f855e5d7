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

#include <span>
#include <vector>

#include "mhqmo/matrix.hpp"
#include "mhqmo/qmo.hpp"
#include "mhqmo/state.hpp"

namespace mhqmo {

/// Operator-valued Margenau-Hill characteristic function
///
///   Phi(u) = (1/g!) sum_{perm of groups} prod_groups exp(i sum_{k in group} H_k u_k)
///
/// with one frequency per observable. Each group exponential is the product
/// of its members' spectral exponentials (members commute). Throws
/// NonIntegerSpectrum unless every label is an integer.
CMatrix char_operator(std::span<const Observable> observables, const Grouping& grouping,
                      std::span<const double> u);

/// phi(u) = Tr[rho Phi(u)].
Complex char_function(std::span<const Observable> observables, const Grouping& grouping,
                      const DensityMatrix& rho, std::span<const double> u);

/// Sharp QMO recovered by discrete Fourier inversion of char_operator on the
/// grid u_k in {0, 2pi/3, 4pi/3}. Exact when every label lies in {-1, 0, +1};
/// anything else throws UnsupportedSpectrum. Serves as an independent check
/// of qmo_jordan.
QmoFamily qmo_from_charfn(std::vector<Observable> observables, Grouping grouping);

}  // namespace mhqmo
