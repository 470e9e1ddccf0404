// Copyright 2026 The QGLM Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qglm/sim/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qglm/error.hpp"

namespace qglm::sim {
namespace {

double off_diagonal_norm2(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t r = 0; r < a.dim; ++r) {
    for (std::size_t c = 0; c < a.dim; ++c) {
      if (r != c) s += std::norm(a(r, c));
    }
  }
  return s;
}

double frobenius_norm2(const DenseMatrix& a) {
  double s = 0.0;
  for (const Complex& v : a.data) s += std::norm(v);
  return s;
}

}  // namespace

DenseEigen hermitian_eigensolve(const DenseMatrix& matrix) {
  const std::size_t n = matrix.dim;
  if (n == 0) throw ArgumentError("empty matrix");
  if (n > kMaxDenseDim) {
    throw CapabilityError("dense eigensolver supports dimension <= " +
                          std::to_string(kMaxDenseDim) + ", got " +
                          std::to_string(n));
  }
  const double scale = std::sqrt(frobenius_norm2(matrix));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = r; c < n; ++c) {
      if (std::abs(matrix(r, c) - std::conj(matrix(c, r))) >
          1e-12 * std::max(1.0, scale)) {
        throw ArgumentError("matrix is not Hermitian");
      }
    }
  }

  DenseMatrix a = matrix;
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  DenseMatrix v(n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = 1.0;

  const double tol2 = std::pow(1e-15 * std::max(scale, 1e-300), 2);
  for (int sweep = 0; sweep < 100 && off_diagonal_norm2(a) > tol2; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag < 1e-300) continue;
        // Phase the (p, q) entry real, then zero it with a real rotation:
        // U = diag(1, e^{-i phi}) * [[c, s], [-s, c]].
        const Complex phase = apq / mag;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex u_pp = c;
        const Complex u_pq = s;
        const Complex u_qp = -s * std::conj(phase);
        const Complex u_qq = c * std::conj(phase);

        // A <- A U (columns p, q).
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * u_pp + akq * u_qp;
          a(k, q) = akp * u_pq + akq * u_qq;
        }
        // A <- U^dagger A (rows p, q).
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
          a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * u_pp + vkq * u_qp;
          v(k, q) = vkp * u_pq + vkq * u_qq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });
  DenseEigen out{std::vector<double>(n), DenseMatrix(n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

EigenResult eigendecompose(const Hamiltonian& h) {
  const std::size_t dim = std::size_t{1} << h.n_qubits();
  if (dim > kMaxDenseDim) {
    throw CapabilityError("exact diagonalization limited to 2^n <= " +
                          std::to_string(kMaxDenseDim));
  }
  const DenseEigen eig = hermitian_eigensolve(h.dense());
  EigenResult out;
  out.eigenvalues = eig.values;
  for (std::size_t k = 0; k < dim; ++k) {
    std::vector<Complex> col(dim);
    for (std::size_t r = 0; r < dim; ++r) col[r] = eig.vectors(r, k);
    out.eigenvectors.push_back(PureState::from_amplitudes(std::move(col), 1e-9));
  }
  return out;
}

}  // namespace qglm::sim
