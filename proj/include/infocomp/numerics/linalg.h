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

#ifndef INFOCOMP_NUMERICS_LINALG_H_
#define INFOCOMP_NUMERICS_LINALG_H_

#include <optional>
#include <span>
#include <vector>

#include "infocomp/numerics/matrix.h"
#include "infocomp/numerics/rng.h"

namespace infocomp {

struct SpectralDecomposition {
  // Sorted descending.
  std::vector<double> eigenvalues;
  // Column j is the unit eigenvector for eigenvalues[j].
  Matrix eigenvectors;
};

// Symmetric eigendecomposition by cyclic Jacobi rotations.
// Throws ValidationError if m is not symmetric to within 1e-9 (scaled by
// max(1, max|m_ij|)).
SpectralDecomposition spectral(const Matrix& m);

// Lower-triangular L with L L^T = m, or nullopt if m is not numerically
// positive definite.
std::optional<Matrix> cholesky(const Matrix& m);

// ln det of a symmetric positive definite matrix. Throws NumericalError when
// the matrix is singular or indefinite.
double log_det_spd(const Matrix& m);

// Solves m x = b for symmetric positive definite m.
std::vector<double> solve_spd(const Matrix& m, std::span<const double> b);

// n x k matrix with orthonormal columns, Haar-distributed.
Matrix random_orthonormal_columns(std::size_t n, std::size_t k, Rng& rng);

}  // namespace infocomp

#endif  // INFOCOMP_NUMERICS_LINALG_H_
