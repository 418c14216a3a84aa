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

#ifndef INFOCOMP_ENTROPY_KDE_H_
#define INFOCOMP_ENTROPY_KDE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "infocomp/entropy/estimate.h"
#include "infocomp/numerics/matrix.h"

namespace infocomp {

struct Bandwidth {
  double b = 0.0;
  // Value of the selection objective at b.
  double objective = 0.0;
};

// Smallest reported density; log of anything below would be -inf or junk.
inline constexpr double kMinDensity = 1e-300;

// Leave-one-out Gaussian-kernel density at point `exclude_id`, using every
// other sample. Underflow to 0 is clamped to kMinDensity and counted in
// *clamped when given.
double kde_loo_density(const SampleMatrix& points, double b,
                       std::size_t exclude_id, std::size_t* clamped = nullptr);

// The same density for every sample at once.
std::vector<double> kde_loo_densities(const SampleMatrix& points, double b,
                                      std::size_t* clamped = nullptr);

// J_b(xi) = b^{-2n} \int K(x/b) K((x - xi)/b) dx for the standard Gaussian
// kernel K, i.e. a Gaussian density of covariance 2 b^2 I evaluated at xi.
double lse_convolution_kernel(std::span<const double> xi, double b);

// sum_k log rho_{b,-k}(x_k); maximized by the ML bandwidth.
double kde_ml_objective(const SampleMatrix& points, double b);
// (1/N^2) sum_ij J_b(x_i - x_j) - (2/N) sum_i rho_{b,-i}(x_i); minimized by
// least-squares cross-validation.
double kde_lse_objective(const SampleMatrix& points, double b);

// Pilot bandwidth sigma * N^{-1/(n+4)}, sigma the RMS coordinate std.
double silverman_bandwidth(const SampleMatrix& points);

Bandwidth select_bandwidth_ml(const SampleMatrix& points);
Bandwidth select_bandwidth_lse(const SampleMatrix& points);

// -(1/N) sum_k log rho_{b,-k}(x_k) at a fixed bandwidth.
EntropyEstimate entropy_kde(const SampleMatrix& points, double b,
                            EntropyMethod tag);

EntropyEstimate entropy_kde_ml(const SampleMatrix& points);
EntropyEstimate entropy_kde_lse(const SampleMatrix& points);

}  // namespace infocomp

#endif  // INFOCOMP_ENTROPY_KDE_H_
