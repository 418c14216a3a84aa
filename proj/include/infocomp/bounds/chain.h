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

#ifndef INFOCOMP_BOUNDS_CHAIN_H_
#define INFOCOMP_BOUNDS_CHAIN_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "infocomp/entropy/estimate.h"

namespace infocomp {

// Random Gaussian constructions for checking the PCA compression chain.
// Per seed: ambient dimension n in [3, max_ambient_dim], kept dimension
// n' in [1, n-1], a scalar target Y, isotropic noise Z ~ N(0, sigma^2 I).
// X = Q diag(s) u with Q a random rotation, u ~ N(0, I_n); the first n'
// scales lie in [1, 2], the rest have variance in [0, lost_variance_max].
// Y is linearly coupled to every coordinate of u, including the lost ones.
struct ChainConstruction {
  std::size_t max_ambient_dim = 5;
  double sigma_min = 0.05;
  double sigma_max = 0.5;
  double lost_variance_max = 0.3;
  std::size_t samples = 5000;
  EstimatorConfig estimator;
};

struct ChainRow {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t n_prime = 0;
  double sigma = 0.0;
  double lambda_next = 0.0;
  double i_xy_true = 0.0;
  double i_xz_y_true = 0.0;
  double i_exz_y_true = 0.0;
  double i_exz_y_est = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  double gap_bound = 0.0;
  bool within_bounds = false;
};

struct ChainReport {
  std::vector<ChainRow> rows;
  double within_rate = 0.0;
};

// E is the exact PCA projector of the construction. A row is within bounds
// when the estimate's 95% interval meets
// [I(X+Z;Y) - gap_bound, I(X+Z;Y)], all three terms in closed form.
ChainReport verify_chain_monte_carlo(const ChainConstruction& construction,
                                     std::span<const std::uint64_t> seeds);

// X confined to an n'-dimensional subspace, Z ~ N(0, sigma^2) on its
// orthogonal complement and independent of (X, Y), so X+Z determines X.
struct IndependenceRow {
  std::uint64_t seed = 0;
  double i_xy_true = 0.0;
  double i_xy_est = 0.0;
  double i_xz_y_est = 0.0;
  double combined_half_width = 0.0;
  bool within_bounds = false;
};

struct IndependenceReport {
  std::vector<IndependenceRow> rows;
  double within_rate = 0.0;
};

// I(X;Y) is estimated on the subspace coordinates of X; kNN estimators are
// not defined on a degenerate n-dimensional cloud.
IndependenceReport verify_independence_monte_carlo(const ChainConstruction& construction,
                                                   std::span<const std::uint64_t> seeds);

}  // namespace infocomp

#endif  // INFOCOMP_BOUNDS_CHAIN_H_
