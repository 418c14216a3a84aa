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

#ifndef INFOCOMP_ENTROPY_KNN_H_
#define INFOCOMP_ENTROPY_KNN_H_

#include <cstddef>
#include <vector>

#include "infocomp/entropy/estimate.h"
#include "infocomp/numerics/matrix.h"

namespace infocomp {

// Neighbour distances below this are treated as this value.
inline constexpr double kMinNeighborDistance = 1e-12;

// Kozachenko-Leonenko estimator with the nearest neighbour.
EntropyEstimate entropy_kl(const SampleMatrix& points);

struct WklWeights {
  std::size_t k = 0;
  std::size_t n = 0;
  // w[j-1] is the weight of the j-th neighbour.
  std::vector<double> w;
  // True when the constraint system was infeasible or ill-conditioned and
  // the unweighted e_k was used instead.
  bool fallback = false;
};

// Admissible neighbour ranks {floor(i k / n) : i = 1..n}, restricted to
// [1, k], ascending and without repeats.
std::vector<std::size_t> wkl_support(std::size_t k, std::size_t n);

// Minimum-l2-norm weights with sum 1, zero outside wkl_support(k, n), and
// sum_j w_j Gamma(j + 2l/n) / Gamma(j) = 0 for l = 1..floor(n/4).
WklWeights solve_wkl_weights(std::size_t k, std::size_t n);

EntropyEstimate entropy_wkl(const SampleMatrix& points, std::size_t k = 5);
EntropyEstimate entropy_wkl(const SampleMatrix& points, const WklWeights& weights);

}  // namespace infocomp

#endif  // INFOCOMP_ENTROPY_KNN_H_
