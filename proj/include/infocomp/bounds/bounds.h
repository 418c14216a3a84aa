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

#ifndef INFOCOMP_BOUNDS_BOUNDS_H_
#define INFOCOMP_BOUNDS_BOUNDS_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "infocomp/numerics/matrix.h"

namespace infocomp {

// h(X) <= h(N(0, cov)) = 0.5 ln det(2 pi e cov). +infinity when cov is
// singular (the bound says nothing there).
double gaussian_entropy_upper(const Matrix& cov);

// h(X + Z) >= h(Z) for Z ~ N(0, noise_cov) independent of X. Throws
// ValidationError for a singular noise covariance.
double additive_noise_lower(const Matrix& noise_cov);

// h(X (.) Z) >= h(Z) + sum_i E ln|X_i| for an elementwise product.
double multiplicative_noise_lower(double noise_entropy,
                                  std::span<const double> mean_log_abs_factors);

// Sample means of ln|x_i| per column with 95% half-widths.
struct MeanLogAbs {
  std::vector<double> value;
  std::vector<double> half_width;
};
MeanLogAbs mean_log_abs(const SampleMatrix& samples);

// Upper end of 0 <= I(X+Z; Y) - I(E(X+Z); Y) for a PCA projector E onto
// n_prime of n dimensions and Z ~ N(0, sigma^2 I):
// (n - n') / 2 * ln(1 + lambda_next / sigma^2).
double pca_mi_gap_bound(std::size_t n, std::size_t n_prime, double lambda_next, double sigma);

// I(X;Y) <= I(f(X,Z); Y) <= I(X;Y) + h(Z) - h(Z | X, Y) when X = g(f(X,Z)).
struct BoundReport {
  double lower = 0.0;
  double upper = 0.0;
  double noise_entropy_upper = 0.0;
  double conditional_noise_entropy_lower = 0.0;
  double gap = 0.0;
  std::string assumptions;
};

// h(Z) is bounded by its Gaussian surrogate; h(Z | X, Y) is supplied by the
// caller (it equals h(Z) when Z is independent of (X, Y)).
BoundReport denoising_chain_bounds(double i_xy, const Matrix& noise_cov,
                                   double conditional_noise_entropy_lower);

}  // namespace infocomp

#endif  // INFOCOMP_BOUNDS_BOUNDS_H_
