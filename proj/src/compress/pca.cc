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

#include "infocomp/compress/pca.h"

#include <algorithm>
#include <string>

#include "infocomp/errors.h"
#include "infocomp/numerics/linalg.h"

namespace infocomp {

double PcaModel::residual_variance() const {
  double s = 0.0;
  for (std::size_t i = latent_dim(); i < explained_variance.size(); ++i) {
    s += std::max(0.0, explained_variance[i]);
  }
  return s;
}

double PcaModel::next_variance() const {
  if (latent_dim() >= explained_variance.size()) return 0.0;
  return std::max(0.0, explained_variance[latent_dim()]);
}

PcaModel pca_fit(const SampleMatrix& points, std::size_t latent_dim) {
  const std::size_t d = points.cols();
  if (latent_dim == 0 || latent_dim > d || latent_dim > points.rows()) {
    throw ValidationError("pca_fit: latent_dim " + std::to_string(latent_dim) +
                          " outside [1, min(N=" + std::to_string(points.rows()) +
                          ", d=" + std::to_string(d) + ")]");
  }
  if (!points.all_finite()) throw ValidationError("pca_fit: non-finite samples");
  const auto eig = spectral(covariance(points));
  PcaModel model;
  model.mean = column_means(points);
  model.explained_variance = eig.eigenvalues;
  model.projection = Matrix(latent_dim, d);
  for (std::size_t k = 0; k < latent_dim; ++k)
    for (std::size_t c = 0; c < d; ++c) model.projection(k, c) = eig.eigenvectors(c, k);
  return model;
}

SampleMatrix pca_encode(const PcaModel& model, const SampleMatrix& points) {
  const std::size_t d = model.ambient_dim();
  if (points.cols() != d) {
    throw ValidationError("pca_encode: expected " + std::to_string(d) +
                          " columns, got " + std::to_string(points.cols()));
  }
  SampleMatrix codes(points.rows(), model.latent_dim());
  std::vector<double> centered(d);
  for (std::size_t r = 0; r < points.rows(); ++r) {
    const auto x = points.row(r);
    for (std::size_t c = 0; c < d; ++c) centered[c] = x[c] - model.mean[c];
    for (std::size_t k = 0; k < model.latent_dim(); ++k) {
      const auto p = model.projection.row(k);
      double s = 0.0;
      for (std::size_t c = 0; c < d; ++c) s += p[c] * centered[c];
      codes(r, k) = s;
    }
  }
  return codes;
}

SampleMatrix pca_decode(const PcaModel& model, const SampleMatrix& codes) {
  if (codes.cols() != model.latent_dim()) {
    throw ValidationError("pca_decode: expected " + std::to_string(model.latent_dim()) +
                          " code columns, got " + std::to_string(codes.cols()));
  }
  const std::size_t d = model.ambient_dim();
  SampleMatrix out(codes.rows(), d);
  for (std::size_t r = 0; r < codes.rows(); ++r) {
    auto y = out.row(r);
    for (std::size_t c = 0; c < d; ++c) y[c] = model.mean[c];
    for (std::size_t k = 0; k < model.latent_dim(); ++k) {
      const double z = codes(r, k);
      const auto p = model.projection.row(k);
      for (std::size_t c = 0; c < d; ++c) y[c] += z * p[c];
    }
  }
  return out;
}

double mean_squared_row_error(const SampleMatrix& a, const SampleMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError("mean_squared_row_error: shape mismatch");
  }
  if (a.rows() == 0) return 0.0;
  double s = 0.0;
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) s += (da[i] - db[i]) * (da[i] - db[i]);
  return s / static_cast<double>(a.rows());
}

}  // namespace infocomp
