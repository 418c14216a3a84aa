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

#include "infocomp/bounds/bounds.h"

#include <cmath>
#include <limits>
#include <string>

#include "infocomp/errors.h"
#include "infocomp/numerics/gaussian.h"
#include "infocomp/numerics/linalg.h"

namespace infocomp {

namespace {

constexpr double kZ95 = 1.959963984540054;

}  // namespace

double gaussian_entropy_upper(const Matrix& cov) {
  if (!cholesky(cov)) return std::numeric_limits<double>::infinity();
  return gaussian_entropy(cov);
}

double additive_noise_lower(const Matrix& noise_cov) {
  if (!cholesky(noise_cov)) {
    throw ValidationError("additive_noise_lower: noise covariance is singular");
  }
  return gaussian_entropy(noise_cov);
}

double multiplicative_noise_lower(double noise_entropy,
                                  std::span<const double> mean_log_abs_factors) {
  double s = noise_entropy;
  for (double v : mean_log_abs_factors) s += v;
  if (!std::isfinite(s)) throw ValidationError("multiplicative_noise_lower: non-finite input");
  return s;
}

MeanLogAbs mean_log_abs(const SampleMatrix& samples) {
  if (samples.rows() < 2) throw ValidationError("mean_log_abs: needs at least 2 samples");
  const double n = static_cast<double>(samples.rows());
  MeanLogAbs out;
  for (std::size_t c = 0; c < samples.cols(); ++c) {
    double sum = 0.0, sum2 = 0.0;
    for (std::size_t r = 0; r < samples.rows(); ++r) {
      const double v = std::log(std::abs(samples(r, c)));
      sum += v;
      sum2 += v * v;
    }
    const double mean = sum / n;
    const double var = std::max(0.0, (sum2 - n * mean * mean) / (n - 1.0));
    out.value.push_back(mean);
    out.half_width.push_back(kZ95 * std::sqrt(var / n));
  }
  return out;
}

double pca_mi_gap_bound(std::size_t n, std::size_t n_prime, double lambda_next,
                        double sigma) {
  if (n_prime > n) throw ValidationError("pca_mi_gap_bound: n' exceeds n");
  if (!(lambda_next >= 0.0)) throw ValidationError("pca_mi_gap_bound: lambda must be >= 0");
  if (!(sigma > 0.0)) {
    throw ValidationError("pca_mi_gap_bound: sigma must be positive; the bound is vacuous "
                          "without noise");
  }
  return 0.5 * static_cast<double>(n - n_prime) * std::log1p(lambda_next / (sigma * sigma));
}

BoundReport denoising_chain_bounds(double i_xy, const Matrix& noise_cov,
                                   double conditional_noise_entropy_lower) {
  BoundReport r;
  r.noise_entropy_upper = gaussian_entropy_upper(noise_cov);
  r.conditional_noise_entropy_lower = conditional_noise_entropy_lower;
  r.gap = r.noise_entropy_upper - conditional_noise_entropy_lower;
  if (r.gap < 0.0) {
    throw ValidationError("denoising_chain_bounds: conditional entropy bound exceeds h(Z)");
  }
  r.lower = i_xy;
  r.upper = i_xy + r.gap;
  r.assumptions = "X recoverable from f(X,Z); h(Z) bounded by a Gaussian of equal covariance";
  return r;
}

}  // namespace infocomp
