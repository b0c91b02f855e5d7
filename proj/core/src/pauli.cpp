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

#include "mhqmo/pauli.hpp"

#include "mhqmo/error.hpp"

namespace mhqmo {

namespace {

CMatrix single(Pauli p) {
  switch (p) {
    case Pauli::I: return pauli_matrices::I();
    case Pauli::X: return pauli_matrices::X();
    case Pauli::Y: return pauli_matrices::Y();
    case Pauli::Z: return pauli_matrices::Z();
  }
  return pauli_matrices::I();
}

// Entry (row, col) of a Pauli string matrix without building it: each
// factor contributes one 2x2 entry selected by the corresponding bits.
Complex string_entry(const PauliString& s, std::size_t row, std::size_t col) {
  Complex v = 1.0;
  const std::size_t n = s.size();
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t shift = n - 1 - k;
    const int r = static_cast<int>((row >> shift) & 1U);
    const int c = static_cast<int>((col >> shift) & 1U);
    switch (s.factors()[k]) {
      case Pauli::I:
        if (r != c) return 0.0;
        break;
      case Pauli::X:
        if (r == c) return 0.0;
        break;
      case Pauli::Y:
        if (r == c) return 0.0;
        v *= (r == 0) ? Complex(0.0, -1.0) : Complex(0.0, 1.0);
        break;
      case Pauli::Z:
        if (r != c) return 0.0;
        if (r == 1) v = -v;
        break;
    }
  }
  return v;
}

}  // namespace

PauliString PauliString::parse(std::string_view label) {
  std::vector<Pauli> f;
  f.reserve(label.size());
  for (char ch : label) {
    switch (ch) {
      case 'I': f.push_back(Pauli::I); break;
      case 'X': f.push_back(Pauli::X); break;
      case 'Y': f.push_back(Pauli::Y); break;
      case 'Z': f.push_back(Pauli::Z); break;
      default:
        throw Error(ErrorKind::ParseError,
                    "invalid Pauli label '" + std::string(label) + "'");
    }
  }
  return PauliString(std::move(f));
}

int PauliString::weight() const noexcept {
  int w = 0;
  for (Pauli p : factors_) w += fuzz_weight(p);
  return w;
}

std::string PauliString::label() const {
  std::string s;
  s.reserve(factors_.size());
  for (Pauli p : factors_) s.push_back("IXYZ"[static_cast<int>(p)]);
  return s;
}

CMatrix PauliString::matrix() const {
  if (factors_.empty()) return CMatrix::identity(1);
  CMatrix m = single(factors_.front());
  for (std::size_t k = 1; k < factors_.size(); ++k) m = tensor(m, single(factors_[k]));
  return m;
}

std::size_t qubit_count(std::size_t dim) {
  if (dim == 0 || (dim & (dim - 1)) != 0) {
    throw Error(ErrorKind::DimNotPowerOfTwo,
                "dimension " + std::to_string(dim) + " is not a power of two");
  }
  std::size_t n = 0;
  while ((std::size_t{1} << n) < dim) ++n;
  return n;
}

std::vector<PauliString> all_pauli_strings(std::size_t nqubits) {
  std::size_t count = 1;
  for (std::size_t k = 0; k < nqubits; ++k) count *= 4;
  std::vector<PauliString> out;
  out.reserve(count);
  for (std::size_t code = 0; code < count; ++code) {
    std::vector<Pauli> f(nqubits);
    std::size_t c = code;
    for (std::size_t k = nqubits; k-- > 0;) {
      f[k] = static_cast<Pauli>(c % 4);
      c /= 4;
    }
    out.emplace_back(std::move(f));
  }
  return out;
}

PauliExpansion pauli_decompose(const CMatrix& m) {
  const std::size_t n = qubit_count(m.dim());
  const std::size_t dim = m.dim();
  PauliExpansion e{n, {}};
  for (auto& s : all_pauli_strings(n)) {
    // Tr[m P] = sum_{ij} m_ij P_ji; P has one non-zero per row.
    Complex t = 0.0;
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        const Complex p = string_entry(s, j, i);
        if (p != Complex{}) t += m(i, j) * p;
      }
    t /= static_cast<double>(dim);
    if (t != Complex{}) e.terms.emplace(std::move(s), t);
  }
  return e;
}

CMatrix pauli_reconstruct(const PauliExpansion& expansion) {
  const std::size_t dim = std::size_t{1} << expansion.nqubits;
  CMatrix out(dim);
  for (const auto& [s, c] : expansion.terms) {
    if (s.size() != expansion.nqubits) {
      throw Error(ErrorKind::InvalidArgument,
                  "Pauli string " + s.label() + " has wrong length");
    }
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) {
        const Complex p = string_entry(s, i, j);
        if (p != Complex{}) out(i, j) += c * p;
      }
  }
  return out;
}

}  // namespace mhqmo
