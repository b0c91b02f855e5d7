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

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mhqmo/matrix.hpp"

namespace mhqmo {

enum class Pauli : unsigned char { I = 0, X = 1, Y = 2, Z = 3 };

/// Unsharpness weight of a single factor: I -> 0, X and Z -> 1, Y -> 2.
/// Y counts twice because it only ever arises as the product of an X and a
/// Z factor.
constexpr int fuzz_weight(Pauli p) noexcept {
  switch (p) {
    case Pauli::I: return 0;
    case Pauli::X: return 1;
    case Pauli::Y: return 2;
    case Pauli::Z: return 1;
  }
  return 0;
}

/// Tensor product of single-qubit Paulis, slot 0 being the most significant
/// (leftmost) factor of the Kronecker product.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::vector<Pauli> factors) : factors_(std::move(factors)) {}
  /// Parses "IXZY"-style labels.
  static PauliString parse(std::string_view label);

  std::size_t size() const noexcept { return factors_.size(); }
  const std::vector<Pauli>& factors() const noexcept { return factors_; }
  int weight() const noexcept;
  std::string label() const;
  CMatrix matrix() const;

  friend auto operator<=>(const PauliString&, const PauliString&) = default;

 private:
  std::vector<Pauli> factors_;
};

struct PauliExpansion {
  std::size_t nqubits = 0;
  std::map<PauliString, Complex> terms;
};

/// Returns log2(dim) or throws DimNotPowerOfTwo.
std::size_t qubit_count(std::size_t dim);

/// c_s = Tr[m P_s] / dim for all 4^n strings. Zero coefficients are kept
/// out of the map.
PauliExpansion pauli_decompose(const CMatrix& m);

CMatrix pauli_reconstruct(const PauliExpansion& expansion);

/// All 4^n strings on n qubits in lexicographic (I < X < Y < Z) order.
std::vector<PauliString> all_pauli_strings(std::size_t nqubits);

}  // namespace mhqmo
