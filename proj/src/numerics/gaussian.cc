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

#include "infocomp/numerics/gaussian.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "infocomp/errors.h"
#include "infocomp/numerics/linalg.h"
#include "infocomp/numerics/special.h"

namespace infocomp {

namespace {

constexpr double kPsdTolerance = 1e-8;

// Factor F with F F^T = cov.
Matrix sampling_factor(const Matrix& cov) {
  if (auto l = cholesky(cov)) return *l;
  const auto eig = spectral(cov);
  const double smallest = eig.eigenvalues.back();
  if (smallest < -kPsdTolerance) {
    throw ValidationError(
        "sample_gaussian: covariance is not positive semi-definite (smallest "
        "eigenvalue " + std::to_string(smallest) + ")");
  }
  const std::size_t n = cov.rows();
  Matrix f(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const double s = std::sqrt(std::max(eig.eigenvalues[j], 0.0));
    for (std::size_t i = 0; i < n; ++i) f(i, j) = eig.eigenvectors(i, j) * s;
  }
  return f;
}

}  // namespace

SampleMatrix sample_gaussian(const Matrix& cov, std::size_t n_samples, Rng& rng) {
  if (cov.rows() != cov.cols()) throw ValidationError("covariance must be square");
  if (!cov.all_finite()) throw ValidationError("covariance has non-finite entries");
  const Matrix f = sampling_factor(cov);
  const std::size_t d = cov.rows();
  SampleMatrix out(n_samples, d);
  std::vector<double> z(d);
  for (std::size_t r = 0; r < n_samples; ++r) {
    for (double& v : z) v = rng.normal();
    auto dst = out.row(r);
    for (std::size_t i = 0; i < d; ++i) {
      double s = 0.0;
      for (std::size_t j = 0; j < d; ++j) s += f(i, j) * z[j];
      dst[i] = s;
    }
  }
  return out;
}

double gaussian_entropy(const Matrix& cov) {
  if (cov.rows() != cov.cols() || cov.rows() == 0) {
    throw ValidationError("gaussian_entropy: covariance must be square, non-empty");
  }
  double log_det;
  try {
    log_det = log_det_spd(cov);
  } catch (const NumericalError&) {
    throw NumericalError(
        "gaussian_entropy: covariance is singular, differential entropy undefined");
  }
  const double d = static_cast<double>(cov.rows());
  return 0.5 * (d * std::log(2.0 * kPi * std::exp(1.0)) + log_det);
}

double gaussian_mi(const Matrix& joint_cov, std::size_t split) {
  const std::size_t d = joint_cov.rows();
  if (joint_cov.cols() != d || split == 0 || split >= d) {
    throw ValidationError("gaussian_mi: split must leave both blocks non-empty");
  }
  Matrix x_block(split, split);
  Matrix y_block(d - split, d - split);
  for (std::size_t i = 0; i < split; ++i)
    for (std::size_t j = 0; j < split; ++j) x_block(i, j) = joint_cov(i, j);
  for (std::size_t i = split; i < d; ++i)
    for (std::size_t j = split; j < d; ++j)
      y_block(i - split, j - split) = joint_cov(i, j);
  try {
    return 0.5 * (log_det_spd(x_block) + log_det_spd(y_block) -
                  log_det_spd(joint_cov));
  } catch (const NumericalError&) {
    throw NumericalError("gaussian_mi: singular covariance block");
  }
}

}  // namespace infocomp
