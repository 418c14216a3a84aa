// Copyright 2026 The infocomp Authors
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

#include "infocomp/numerics/linalg.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "infocomp/errors.h"

namespace infocomp {

namespace {

constexpr int kMaxJacobiSweeps = 100;

double off_diagonal_norm2(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) s += a(i, j) * a(i, j);
  return s;
}

}  // namespace

SpectralDecomposition spectral(const Matrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("spectral: matrix not square");
  const std::size_t n = m.rows();
  const double scale = std::max(1.0, m.max_abs());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (std::abs(m(i, j) - m(j, i)) > 1e-9 * scale) {
        throw ValidationError("spectral: matrix is not symmetric at (" +
                              std::to_string(i) + ", " + std::to_string(j) + ")");
      }
    }
  }

  Matrix a = m;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(j, i) = a(i, j);
  Matrix v = Matrix::identity(n);

  double total = 0.0;
  for (double x : a.data()) total += x * x;
  const double tol = 1e-30 * std::max(total, 1e-300);

  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_norm2(a) <= tol) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        // Skip rotations that cannot change the diagonal in floating point.
        if (sweep > 3 && std::abs(apq) < 1e-18 * (std::abs(app) + std::abs(aqq)))
        {
          a(p, q) = a(q, p) = 0.0;
          continue;
        }
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x) > a(y, y);
  });
  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]);
    // Sign convention: largest-magnitude component positive.
    std::size_t arg = 0;
    for (std::size_t k = 1; k < n; ++k)
      if (std::abs(v(k, order[j])) > std::abs(v(arg, order[j]))) arg = k;
    const double sign = v(arg, order[j]) < 0 ? -1.0 : 1.0;
    for (std::size_t k = 0; k < n; ++k)
      out.eigenvectors(k, j) = sign * v(k, order[j]);
  }
  return out;
}

std::optional<Matrix> cholesky(const Matrix& m) {
  if (m.rows() != m.cols()) throw ValidationError("cholesky: matrix not square");
  const std::size_t n = m.rows();
  Matrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double diag = m(j, j);
    for (std::size_t k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
    if (!(diag > 0.0) || !std::isfinite(diag)) return std::nullopt;
    const double ljj = std::sqrt(diag);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      l(i, j) = s / ljj;
    }
  }
  return l;
}

double log_det_spd(const Matrix& m) {
  auto l = cholesky(m);
  if (!l) throw NumericalError("log_det_spd: matrix is singular or indefinite");
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) s += std::log((*l)(i, i));
  return 2.0 * s;
}

std::vector<double> solve_spd(const Matrix& m, std::span<const double> b) {
  auto l = cholesky(m);
  if (!l) throw NumericalError("solve_spd: matrix is singular or indefinite");
  const std::size_t n = m.rows();
  if (b.size() != n) throw ValidationError("solve_spd: rhs size mismatch");
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double s = b[i];
    for (std::size_t k = 0; k < i; ++k) s -= (*l)(i, k) * y[k];
    y[i] = s / (*l)(i, i);
  }
  std::vector<double> x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = y[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= (*l)(k, i) * x[k];
    x[i] = s / (*l)(i, i);
  }
  return x;
}

Matrix random_orthonormal_columns(std::size_t n, std::size_t k, Rng& rng) {
  if (k > n) throw ValidationError("cannot fit more orthonormal columns than rows");
  Matrix q(n, k);
  for (std::size_t j = 0; j < k; ++j) {
    // Modified Gram-Schmidt with one reorthogonalization pass.
    std::vector<double> col(n);
    double norm = 0.0;
    while (norm < 1e-6) {
      for (double& x : col) x = rng.normal();
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t p = 0; p < j; ++p) {
          double dot = 0.0;
          for (std::size_t i = 0; i < n; ++i) dot += q(i, p) * col[i];
          for (std::size_t i = 0; i < n; ++i) col[i] -= dot * q(i, p);
        }
      }
      norm = 0.0;
      for (double x : col) norm += x * x;
      norm = std::sqrt(norm);
    }
    for (std::size_t i = 0; i < n; ++i) q(i, j) = col[i] / norm;
  }
  return q;
}

}  // namespace infocomp
