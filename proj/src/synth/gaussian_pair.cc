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

#include "infocomp/synth/gaussian_pair.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "infocomp/errors.h"
#include "infocomp/numerics/gaussian.h"
#include "infocomp/numerics/rng.h"

namespace infocomp {

namespace {

void validate_kappa(double kappa) {
  if (!(kappa >= 0.0) || kappa > kMaxKappa) {
    throw ValidationError("kappa must lie in [0, 30] nats, got " + std::to_string(kappa));
  }
}

}  // namespace

double block_correlation(const GaussianPairSpec& spec) {
  validate_kappa(spec.kappa);
  if (spec.n_prime == 0 || spec.m_prime == 0) {
    throw ValidationError("latent dimensions must be positive");
  }
  const double blocks = static_cast<double>(std::min(spec.n_prime, spec.m_prime));
  return std::sqrt(-std::expm1(-2.0 * spec.kappa / blocks));
}

Matrix build_covariance(const GaussianPairSpec& spec) {
  const double a = block_correlation(spec);
  const std::size_t n = spec.n_prime;
  Matrix cov = Matrix::identity(n + spec.m_prime);
  for (std::size_t i = 0; i < std::min(n, spec.m_prime); ++i) {
    cov(i, n + i) = a;
    cov(n + i, i) = a;
  }
  return cov;
}

GaussianPair sample_gaussian_pair(const GaussianPairSpec& spec, std::size_t n_samples) {
  const Matrix cov = build_covariance(spec);
  Rng rng(spec.seed);
  const SampleMatrix joint = sample_gaussian(cov, n_samples, rng);
  return {select_columns(joint, 0, spec.n_prime),
          select_columns(joint, spec.n_prime, spec.m_prime), spec.kappa};
}

Matrix pca_counterexample_covariance(double kappa, double x2_variance) {
  validate_kappa(kappa);
  if (!(x2_variance > 0.0 && x2_variance < 1.0)) {
    throw ValidationError("x2_variance must lie in (0, 1)");
  }
  const double a = std::sqrt(-std::expm1(-2.0 * kappa));
  const double c = a * std::sqrt(x2_variance);
  return Matrix{{1.0, 0.0, 0.0}, {0.0, x2_variance, c}, {0.0, c, 1.0}};
}

}  // namespace infocomp
