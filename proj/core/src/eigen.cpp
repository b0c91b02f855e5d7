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

#include "mhqmo/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "mhqmo/error.hpp"

namespace mhqmo {

namespace {

double off_diagonal_norm(const CMatrix& a) {
  double s = 0.0;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

// Applies A <- G^dagger A G and V <- V G for the 2x2 unitary G acting on
// indices (p, q): G = [[gpp, gpq], [gqp, gqq]].
void rotate(CMatrix& a, CMatrix& v, std::size_t p, std::size_t q, Complex gpp,
            Complex gpq, Complex gqp, Complex gqq) {
  const std::size_t n = a.dim();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * gpp + akq * gqp;
    a(k, q) = akp * gpq + akq * gqq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
    a(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * gpp + vkq * gqp;
    v(k, q) = vkp * gpq + vkq * gqq;
  }
}

}  // namespace

EigenSystem eig_hermitian(const CMatrix& m, const JacobiOptions& options) {
  const double defect = m.hermiticity_defect();
  if (defect > kHermitianTol) {
    throw Error(ErrorKind::NotHermitian,
                "hermiticity defect " + std::to_string(defect) +
                    " exceeds tolerance");
  }
  const std::size_t n = m.dim();
  CMatrix a = m;
  CMatrix v = CMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();

  const double stop = options.relative_tolerance * m.frobenius_norm();
  int sweep = 0;
  while (off_diagonal_norm(a) > stop) {
    if (sweep++ >= options.max_sweeps) {
      throw Error(ErrorKind::NoConvergence,
                  "Jacobi did not converge in " +
                      std::to_string(options.max_sweeps) + " sweeps");
    }
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double r = std::abs(apq);
        if (r == 0.0) continue;
        const Complex phase = apq / r;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * r);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // G = diag(1, e^{-i phi}) * [[c, s], [-s, c]]
        const Complex conj_phase = std::conj(phase);
        rotate(a, v, p, q, c, s, -s * conj_phase, c * conj_phase);
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() > a(j, j).real();
  });

  EigenSystem out{std::vector<double>(n), CMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

std::vector<double> eigvals_hermitian(const CMatrix& m) {
  return eig_hermitian(m).values;
}

double min_eigenvalue(const CMatrix& m) {
  const auto values = eigvals_hermitian(m);
  return values.empty() ? 0.0 : values.back();
}

}  // namespace mhqmo
