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

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace mhqmo {

using Complex = std::complex<double>;

/// Absolute tolerance used to classify a matrix as Hermitian.
inline constexpr double kHermitianTol = 1e-12;

/// Dense square complex matrix stored row-major.
///
/// This is the carrier for every operator in the library: observables,
/// projectors, QMO elements, density matrices. Dimensions are small (2 to 16)
/// so all algorithms are plain O(n^3) loops.
class CMatrix {
 public:
  CMatrix() = default;
  explicit CMatrix(std::size_t dim);
  CMatrix(std::size_t dim, std::vector<Complex> entries);
  CMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static CMatrix identity(std::size_t dim);
  static CMatrix zeros(std::size_t dim) { return CMatrix(dim); }
  static CMatrix diagonal(std::span<const double> values);

  std::size_t dim() const noexcept { return dim_; }
  std::span<const Complex> entries() const noexcept { return data_; }

  Complex& operator()(std::size_t row, std::size_t col) {
    return data_[row * dim_ + col];
  }
  const Complex& operator()(std::size_t row, std::size_t col) const {
    return data_[row * dim_ + col];
  }

  CMatrix adjoint() const;
  Complex trace() const;
  double frobenius_norm() const;
  double max_abs() const;

  /// max_{ij} |M_ij - conj(M_ji)|
  double hermiticity_defect() const;
  bool is_hermitian(double tol = kHermitianTol) const {
    return hermiticity_defect() <= tol;
  }

  CMatrix& operator+=(const CMatrix& rhs);
  CMatrix& operator-=(const CMatrix& rhs);
  CMatrix& operator*=(Complex scalar);

  friend CMatrix operator+(CMatrix lhs, const CMatrix& rhs) { return lhs += rhs; }
  friend CMatrix operator-(CMatrix lhs, const CMatrix& rhs) { return lhs -= rhs; }
  friend CMatrix operator*(CMatrix lhs, Complex scalar) { return lhs *= scalar; }
  friend CMatrix operator*(Complex scalar, CMatrix rhs) { return rhs *= scalar; }
  friend CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs);

  friend bool operator==(const CMatrix&, const CMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Complex> data_;
};

/// Kronecker product a (x) b.
CMatrix tensor(const CMatrix& a, const CMatrix& b);

/// Upper-left `size` x `size` block starting at (offset, offset).
CMatrix principal_block(const CMatrix& m, std::size_t offset, std::size_t size);

/// Entry-wise max |a - b|. Dimensions must agree.
double max_abs_diff(const CMatrix& a, const CMatrix& b);

/// A*B - B*A
CMatrix commutator(const CMatrix& a, const CMatrix& b);

/// Tr[a b] computed without forming the product.
Complex trace_of_product(const CMatrix& a, const CMatrix& b);

namespace pauli_matrices {
CMatrix I();
CMatrix X();
CMatrix Y();
CMatrix Z();
}  // namespace pauli_matrices

}  // namespace mhqmo
