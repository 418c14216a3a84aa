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

#include "infocomp/entropy/knn.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "infocomp/errors.h"
#include "infocomp/numerics/parallel.h"
#include "infocomp/numerics/special.h"
#include "infocomp/spatial/neighbor_index.h"

namespace infocomp {

namespace {

constexpr double kWeightResidualTolerance = 1e-10;
constexpr long double kRankTolerance = 1e-12L;

WklWeights unweighted(std::size_t k, std::size_t n, bool fallback) {
  WklWeights out{k, n, std::vector<double>(k, 0.0), fallback};
  out.w[k - 1] = 1.0;
  return out;
}

void require_sample(const SampleMatrix& points, std::size_t min_n,
                    const char* who) {
  if (points.rows() < min_n) {
    throw ValidationError(std::string(who) + ": needs at least " +
                          std::to_string(min_n) + " samples, got " +
                          std::to_string(points.rows()));
  }
  if (points.cols() == 0) throw ValidationError(std::string(who) + ": zero dimension");
}

}  // namespace

EntropyEstimate entropy_kl(const SampleMatrix& points) {
  WklWeights nearest{1, points.cols(), {1.0}, false};
  auto est = entropy_wkl(points, nearest);
  est.method = EntropyMethod::kKl;
  return est;
}

std::vector<std::size_t> wkl_support(std::size_t k, std::size_t n) {
  if (k == 0 || n == 0) throw ValidationError("wkl_support: k and n must be >= 1");
  std::vector<std::size_t> support;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t j = i * k / n;
    if (j >= 1 && (support.empty() || support.back() != j)) support.push_back(j);
  }
  return support;
}

WklWeights solve_wkl_weights(std::size_t k, std::size_t n) {
  const auto support = wkl_support(k, n);
  const std::size_t constraints = 1 + n / 4;
  const std::size_t m = support.size();
  if (constraints > m) return unweighted(k, n, true);

  // Rows of A: the sum-to-one row, then one gamma-ratio row per l.
  std::vector<std::vector<long double>> rows(constraints,
                                             std::vector<long double>(m, 1.0L));
  for (std::size_t l = 1; l < constraints; ++l) {
    const long double shift = 2.0L * static_cast<long double>(l) / n;
    for (std::size_t c = 0; c < m; ++c) {
      const long double j = static_cast<long double>(support[c]);
      rows[l][c] = std::exp(std::lgamma(j + shift) - std::lgamma(j));
    }
  }

  // Least-norm solution w = A^T (A A^T)^{-1} e_1 via Gram-Schmidt on the rows:
  // A = R^T Q^T with orthonormal Q rows, so w = Q z where R^T z = e_1.
  std::vector<std::vector<long double>> q;
  std::vector<std::vector<long double>> r(constraints,
                                          std::vector<long double>(constraints, 0.0L));
  long double max_norm = 0.0L;
  for (std::size_t i = 0; i < constraints; ++i) {
    std::vector<long double> v = rows[i];
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t p = 0; p < i; ++p) {
        long double dot = 0.0L;
        for (std::size_t c = 0; c < m; ++c) dot += q[p][c] * v[c];
        r[p][i] += dot;
        for (std::size_t c = 0; c < m; ++c) v[c] -= dot * q[p][c];
      }
    }
    long double norm = 0.0L;
    for (long double x : v) norm += x * x;
    norm = std::sqrt(norm);
    long double row_norm = 0.0L;
    for (long double x : rows[i]) row_norm += x * x;
    max_norm = std::max(max_norm, std::sqrt(row_norm));
    if (norm <= kRankTolerance * max_norm) return unweighted(k, n, true);
    r[i][i] = norm;
    for (long double& x : v) x /= norm;
    q.push_back(std::move(v));
  }
  // Forward substitution on R^T z = e_1.
  std::vector<long double> z(constraints, 0.0L);
  for (std::size_t i = 0; i < constraints; ++i) {
    long double s = i == 0 ? 1.0L : 0.0L;
    for (std::size_t p = 0; p < i; ++p) s -= r[p][i] * z[p];
    z[i] = s / r[i][i];
  }
  WklWeights out{k, n, std::vector<double>(k, 0.0), false};
  for (std::size_t c = 0; c < m; ++c) {
    long double w = 0.0L;
    for (std::size_t i = 0; i < constraints; ++i) w += q[i][c] * z[i];
    out.w[support[c] - 1] = static_cast<double>(w);
  }
  // Verify the system by substitution before trusting it.
  for (std::size_t i = 0; i < constraints; ++i) {
    long double s = 0.0L;
    for (std::size_t c = 0; c < m; ++c) s += rows[i][c] * out.w[support[c] - 1];
    const long double target = i == 0 ? 1.0L : 0.0L;
    if (!(std::abs(s - target) <= kWeightResidualTolerance)) {
      return unweighted(k, n, true);
    }
  }
  return out;
}

EntropyEstimate entropy_wkl(const SampleMatrix& points, std::size_t k) {
  if (k == 0) throw ValidationError("entropy_wkl: k must be >= 1");
  return entropy_wkl(points, solve_wkl_weights(k, points.cols()));
}

EntropyEstimate entropy_wkl(const SampleMatrix& points, const WklWeights& weights) {
  const std::size_t k = weights.w.size();
  if (k == 0) throw ValidationError("entropy_wkl: empty weight vector");
  require_sample(points, k + 1, "entropy_wkl");
  const std::size_t n = points.cols();
  const std::size_t big_n = points.rows();

  // Only ranks up to the last nonzero weight need to be queried.
  std::size_t needed = 0;
  for (std::size_t j = 0; j < k; ++j)
    if (weights.w[j] != 0.0) needed = j + 1;
  if (needed == 0) throw ValidationError("entropy_wkl: all weights are zero");

  // ln xi_(j),i = -Psi(j) + ln c_1(n) + ln(N-1) + n ln rho_(j),i
  const double base = log_unit_ball_volume(n) + std::log(static_cast<double>(big_n - 1));
  std::vector<double> offsets(needed);
  for (std::size_t j = 0; j < needed; ++j) {
    offsets[j] = base - digamma(static_cast<double>(j + 1));
  }

  NeighborIndex index(points);
  const Matrix dist = index.knn_distances(needed);
  std::vector<double> contributions(big_n);
  std::vector<std::size_t> clamped(big_n, 0);
  const double dim = static_cast<double>(n);
  parallel_for(big_n, [&](std::size_t i) {
    double c = 0.0;
    for (std::size_t j = 0; j < needed; ++j) {
      const double wj = weights.w[j];
      if (wj == 0.0) continue;
      double rho = dist(i, j);
      if (rho < kMinNeighborDistance) {
        rho = kMinNeighborDistance;
        ++clamped[i];
      }
      c += wj * (offsets[j] + dim * std::log(rho));
    }
    contributions[i] = c;
  });
  std::size_t total_clamped = 0;
  for (std::size_t c : clamped) total_clamped += c;
  return estimate_from_contributions(contributions, EntropyMethod::kWkl,
                                     total_clamped);
}

}  // namespace infocomp
