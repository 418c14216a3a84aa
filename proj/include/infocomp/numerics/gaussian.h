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

#ifndef INFOCOMP_NUMERICS_GAUSSIAN_H_
#define INFOCOMP_NUMERICS_GAUSSIAN_H_

#include <cstddef>

#include "infocomp/numerics/matrix.h"
#include "infocomp/numerics/rng.h"

namespace infocomp {

// N i.i.d. rows from N(0, cov). Uses a Cholesky factor, falling back to the
// eigendecomposition for semi-definite covariances. Throws ValidationError
// when the smallest eigenvalue is below -1e-8.
SampleMatrix sample_gaussian(const Matrix& cov, std::size_t n_samples, Rng& rng);

// Differential entropy of N(., cov) in nats: 0.5 ln det(2 pi e cov).
double gaussian_entropy(const Matrix& cov);

// I(X;Y) in nats for a jointly Gaussian (X, Y) whose first `split`
// coordinates form X. Closed-form ground truth for every Gaussian test.
double gaussian_mi(const Matrix& joint_cov, std::size_t split);

}  // namespace infocomp

#endif  // INFOCOMP_NUMERICS_GAUSSIAN_H_
