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

#include "mhqmo/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mhqmo/error.hpp"

namespace mhqmo {

namespace {

void require_same_dim(const CMatrix& a, const CMatrix& b, const char* what) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimMismatch,
                std::string(what) + ": " + std::to_string(a.dim()) + " vs " +
                    std::to_string(b.dim()));
  }
}

}  // namespace

CMatrix::CMatrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

CMatrix::CMatrix(std::size_t dim, std::vector<Complex> entries)
    : dim_(dim), data_(std::move(entries)) {
  if (data_.size() != dim_ * dim_) {
    throw Error(ErrorKind::InvalidArgument,
                "entry count " + std::to_string(data_.size()) +
                    " does not match dim^2 for dim " + std::to_string(dim_));
  }
}

CMatrix::CMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : dim_(rows.size()) {
  data_.reserve(dim_ * dim_);
  for (const auto& row : rows) {
    if (row.size() != dim_) {
      throw Error(ErrorKind::InvalidArgument, "matrix rows must be square");
    }
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

CMatrix CMatrix::identity(std::size_t dim) {
  CMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::diagonal(std::span<const double> values) {
  CMatrix m(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = values[i];
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

Complex CMatrix::trace() const {
  Complex t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += (*this)(i, i);
  return t;
}

double CMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto& z : data_) s += std::norm(z);
  return std::sqrt(s);
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z));
  return m;
}

double CMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j)
      worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
  return worst;
}

CMatrix& CMatrix::operator+=(const CMatrix& rhs) {
  require_same_dim(*this, rhs, "matrix addition");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += rhs.data_[k];
  return *this;
}

CMatrix& CMatrix::operator-=(const CMatrix& rhs) {
  require_same_dim(*this, rhs, "matrix subtraction");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= rhs.data_[k];
  return *this;
}

CMatrix& CMatrix::operator*=(Complex scalar) {
  for (auto& z : data_) z *= scalar;
  return *this;
}

CMatrix operator*(const CMatrix& lhs, const CMatrix& rhs) {
  require_same_dim(lhs, rhs, "matrix product");
  const std::size_t n = lhs.dim();
  CMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

CMatrix tensor(const CMatrix& a, const CMatrix& b) {
  const std::size_t na = a.dim();
  const std::size_t nb = b.dim();
  CMatrix out(na * nb);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = 0; j < na; ++j) {
      const Complex aij = a(i, j);
      for (std::size_t k = 0; k < nb; ++k)
        for (std::size_t l = 0; l < nb; ++l)
          out(i * nb + k, j * nb + l) = aij * b(k, l);
    }
  return out;
}

CMatrix principal_block(const CMatrix& m, std::size_t offset, std::size_t size) {
  if (offset + size > m.dim()) {
    throw Error(ErrorKind::InvalidArgument, "principal block out of range");
  }
  CMatrix out(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = 0; j < size; ++j) out(i, j) = m(offset + i, offset + j);
  return out;
}

double max_abs_diff(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "max_abs_diff");
  double worst = 0.0;
  auto ea = a.entries();
  auto eb = b.entries();
  for (std::size_t k = 0; k < ea.size(); ++k)
    worst = std::max(worst, std::abs(ea[k] - eb[k]));
  return worst;
}

CMatrix commutator(const CMatrix& a, const CMatrix& b) { return a * b - b * a; }

Complex trace_of_product(const CMatrix& a, const CMatrix& b) {
  require_same_dim(a, b, "trace_of_product");
  Complex t = 0.0;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) t += a(i, k) * b(k, i);
  return t;
}

namespace pauli_matrices {
CMatrix I() { return CMatrix::identity(2); }
CMatrix X() { return CMatrix{{0.0, 1.0}, {1.0, 0.0}}; }
CMatrix Y() {
  return CMatrix{{0.0, Complex(0.0, -1.0)}, {Complex(0.0, 1.0), 0.0}};
}
CMatrix Z() { return CMatrix{{1.0, 0.0}, {0.0, -1.0}}; }
}  // namespace pauli_matrices

}  // namespace mhqmo
