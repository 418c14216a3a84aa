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

#ifndef INFOCOMP_COMPRESS_PCA_H_
#define INFOCOMP_COMPRESS_PCA_H_

#include <cstddef>
#include <vector>

#include "infocomp/numerics/matrix.h"

namespace infocomp {

// Orthogonal projector onto the leading principal directions.
struct PcaModel {
  std::vector<double> mean;
  // latent_dim x ambient_dim, orthonormal rows.
  Matrix projection;
  // Every eigenvalue of the (1/N) covariance, descending.
  std::vector<double> explained_variance;

  std::size_t latent_dim() const { return projection.rows(); }
  std::size_t ambient_dim() const { return projection.cols(); }
  // Sum of the discarded eigenvalues. Equals the mean squared norm of the
  // reconstruction residual on the training data.
  double residual_variance() const;
  // Eigenvalue just past the kept block; 0 when nothing is discarded.
  double next_variance() const;
};

PcaModel pca_fit(const SampleMatrix& points, std::size_t latent_dim);
SampleMatrix pca_encode(const PcaModel& model, const SampleMatrix& points);
SampleMatrix pca_decode(const PcaModel& model, const SampleMatrix& codes);

// Mean over rows of the squared Euclidean distance between a and b.
double mean_squared_row_error(const SampleMatrix& a, const SampleMatrix& b);

}  // namespace infocomp

#endif  // INFOCOMP_COMPRESS_PCA_H_
