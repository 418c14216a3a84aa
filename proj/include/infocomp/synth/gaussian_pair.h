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

#ifndef INFOCOMP_SYNTH_GAUSSIAN_PAIR_H_
#define INFOCOMP_SYNTH_GAUSSIAN_PAIR_H_

#include <cstddef>
#include <cstdint>

#include "infocomp/numerics/matrix.h"

namespace infocomp {

// Jointly Gaussian latents (xi, eta) with a prescribed mutual information.
struct GaussianPairSpec {
  std::size_t n_prime = 2;  // dimension of xi
  std::size_t m_prime = 2;  // dimension of eta
  double kappa = 1.0;       // target I(xi; eta) in nats
  std::uint64_t seed = 0;
};

inline constexpr double kMaxKappa = 30.0;

// sqrt(1 - exp(-2 kappa / min(n', m'))): the correlation of each coupled
// coordinate pair, so every block carries an equal share of kappa.
double block_correlation(const GaussianPairSpec& spec);

// Unit-diagonal covariance of [xi | eta] with the block correlation at
// (i, n' + i) for i < min(n', m'). Throws ValidationError for kappa outside
// [0, 30] or zero dimensions.
Matrix build_covariance(const GaussianPairSpec& spec);

struct GaussianPair {
  SampleMatrix xi;
  SampleMatrix eta;
  double true_mi = 0.0;
};

// Draws from build_covariance(spec) with Rng(spec.seed).
GaussianPair sample_gaussian_pair(const GaussianPairSpec& spec, std::size_t n_samples);

// Covariance of (X1, X2, Y) where X1 carries the larger variance but only X2
// informs Y: var X1 = 1, var X2 = x2_variance < 1, var Y = 1 and
// I(X; Y) = kappa. A one-component PCA of X keeps X1 and loses everything.
Matrix pca_counterexample_covariance(double kappa, double x2_variance);

}  // namespace infocomp

#endif  // INFOCOMP_SYNTH_GAUSSIAN_PAIR_H_
