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

#include "infocomp/entropy/kde.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "infocomp/errors.h"
#include "infocomp/numerics/parallel.h"
#include "infocomp/numerics/special.h"

namespace infocomp {

namespace {

// Kernel terms farther than kCutoff bandwidths are below e^{-50} and skipped.
constexpr double kCutoff = 10.0;
// Windowed kernel sums below this fall back to an exact log-sum-exp over all
// samples, so truncation never dominates a small density.
constexpr double kWindowFloor = 1e-8;
constexpr int kGoldenIterations = 60;
constexpr double kGoldenTolerance = 1e-5;
constexpr double kSearchSpan = 100.0;

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    const double d = a[c] - b[c];
    s += d * d;
  }
  return s;
}

void require_kde_sample(const SampleMatrix& points) {
  if (points.rows() < 2) throw ValidationError("KDE needs at least 2 samples");
  if (points.cols() == 0) throw ValidationError("KDE: zero dimension");
  if (!points.all_finite()) throw ValidationError("KDE: non-finite samples");
}

// Samples ordered by their first coordinate; neighbours within a radius are
// found by scanning the slab |x_0 - q_0| <= radius.
class Slab {
 public:
  explicit Slab(const SampleMatrix& points) : points_(points) {
    order_.resize(points.rows());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return points(a, 0) < points(b, 0);
    });
    position_.resize(points.rows());
    keys_.resize(points.rows());
    for (std::size_t p = 0; p < order_.size(); ++p) {
      position_[order_[p]] = p;
      keys_[p] = points(order_[p], 0);
    }
  }

  // Calls fn(j, squared distance) for every j != i in the slab around i.
  template <typename Fn>
  void for_each_near(std::size_t i, double radius, Fn&& fn) const {
    const std::size_t p = position_[i];
    const double center = keys_[p];
    const auto xi = points_.row(i);
    for (std::size_t q = p + 1; q < keys_.size() && keys_[q] - center <= radius; ++q) {
      fn(order_[q], squared_distance(points_.row(order_[q]), xi));
    }
    for (std::size_t q = p; q-- > 0 && center - keys_[q] <= radius;) {
      fn(order_[q], squared_distance(points_.row(order_[q]), xi));
    }
  }

 private:
  const SampleMatrix& points_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> position_;
  std::vector<double> keys_;
};

// ln of (2 pi)^{n/2} b^n (N - 1): the leave-one-out normalizer.
double log_normalizer(const SampleMatrix& points, double b) {
  const double n = static_cast<double>(points.cols());
  return 0.5 * n * std::log(2.0 * kPi) + n * std::log(b) +
         std::log(static_cast<double>(points.rows() - 1));
}

// ln rho_{b,-i}(x_i) computed without underflow.
double loo_log_density(const SampleMatrix& points, const Slab& slab, double b,
                       std::size_t i) {
  const double inv2b2 = 0.5 / (b * b);
  double sum = 0.0;
  slab.for_each_near(i, kCutoff * b, [&](std::size_t, double d2) {
    sum += std::exp(-d2 * inv2b2);
  });
  if (sum >= kWindowFloor) return std::log(sum) - log_normalizer(points, b);
  // Exact log-sum-exp over every other sample.
  double best = -std::numeric_limits<double>::infinity();
  const auto xi = points.row(i);
  std::vector<double> exponents;
  exponents.reserve(points.rows() - 1);
  for (std::size_t j = 0; j < points.rows(); ++j) {
    if (j == i) continue;
    const double e = -squared_distance(points.row(j), xi) * inv2b2;
    exponents.push_back(e);
    best = std::max(best, e);
  }
  double acc = 0.0;
  for (double e : exponents) acc += std::exp(e - best);
  return best + std::log(acc) - log_normalizer(points, b);
}

std::vector<double> loo_log_densities(const SampleMatrix& points, double b) {
  Slab slab(points);
  std::vector<double> out(points.rows());
  parallel_for(points.rows(), [&](std::size_t i) {
    out[i] = loo_log_density(points, slab, b, i);
  });
  return out;
}

// Golden-section search on ln b over [ln(b_S/100), ln(100 b_S)].
template <typename Objective>
Bandwidth golden_section_min(const SampleMatrix& points, Objective&& cost) {
  const double pilot = silverman_bandwidth(points);
  double lo = std::log(pilot / kSearchSpan);
  double hi = std::log(pilot * kSearchSpan);
  const double ratio = 0.5 * (std::sqrt(5.0) - 1.0);
  auto eval = [&](double log_b) {
    const double v = cost(std::exp(log_b));
    return std::isfinite(v) ? v : std::numeric_limits<double>::infinity();
  };
  double x1 = hi - ratio * (hi - lo);
  double x2 = lo + ratio * (hi - lo);
  double f1 = eval(x1);
  double f2 = eval(x2);
  for (int it = 0; it < kGoldenIterations && hi - lo > kGoldenTolerance; ++it) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = eval(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = eval(x2);
    }
  }
  const double best = f1 <= f2 ? x1 : x2;
  const double value = std::min(f1, f2);
  if (!std::isfinite(value)) {
    throw NumericalError("bandwidth search found no finite objective value");
  }
  return Bandwidth{std::exp(best), value};
}

}  // namespace

double kde_loo_density(const SampleMatrix& points, double b,
                       std::size_t exclude_id, std::size_t* clamped) {
  require_kde_sample(points);
  if (!(b > 0.0)) throw ValidationError("bandwidth must be positive");
  if (exclude_id >= points.rows()) throw ValidationError("exclude_id out of range");
  const double n = static_cast<double>(points.cols());
  const auto xi = points.row(exclude_id);
  double sum = 0.0;
  for (std::size_t j = 0; j < points.rows(); ++j) {
    if (j == exclude_id) continue;
    sum += std::exp(-0.5 * squared_distance(points.row(j), xi) / (b * b));
  }
  const double density = sum / (std::pow(2.0 * kPi, 0.5 * n) * std::pow(b, n) *
                                static_cast<double>(points.rows() - 1));
  if (!(density >= kMinDensity)) {
    if (clamped) ++*clamped;
    return kMinDensity;
  }
  return density;
}

std::vector<double> kde_loo_densities(const SampleMatrix& points, double b,
                                      std::size_t* clamped) {
  require_kde_sample(points);
  if (!(b > 0.0)) throw ValidationError("bandwidth must be positive");
  auto logs = loo_log_densities(points, b);
  for (double& v : logs) {
    v = std::exp(v);
    if (!(v >= kMinDensity)) {
      v = kMinDensity;
      if (clamped) ++*clamped;
    }
  }
  return logs;
}

double lse_convolution_kernel(std::span<const double> xi, double b) {
  if (!(b > 0.0)) throw ValidationError("bandwidth must be positive");
  const double n = static_cast<double>(xi.size());
  double r2 = 0.0;
  for (double v : xi) r2 += v * v;
  return std::exp(-r2 / (4.0 * b * b)) / std::pow(4.0 * kPi * b * b, 0.5 * n);
}

double kde_ml_objective(const SampleMatrix& points, double b) {
  require_kde_sample(points);
  const auto logs = loo_log_densities(points, b);
  double s = 0.0;
  for (double v : logs) s += v;
  return s;
}

double kde_lse_objective(const SampleMatrix& points, double b) {
  require_kde_sample(points);
  const std::size_t big_n = points.rows();
  const double n = static_cast<double>(points.cols());
  Slab slab(points);
  // Per-sample partial sums of the convolution and leave-one-out kernels.
  std::vector<double> conv(big_n);
  std::vector<double> loo(big_n);
  const double inv2b2 = 0.5 / (b * b);
  const double inv4b2 = 0.25 / (b * b);
  parallel_for(big_n, [&](std::size_t i) {
    double c = 1.0;  // the j == i term of the double sum
    double l = 0.0;
    slab.for_each_near(i, kCutoff * std::sqrt(2.0) * b, [&](std::size_t, double d2) {
      c += std::exp(-d2 * inv4b2);
      l += std::exp(-d2 * inv2b2);
    });
    conv[i] = c;
    loo[i] = l;
  });
  double conv_sum = 0.0;
  double loo_sum = 0.0;
  for (std::size_t i = 0; i < big_n; ++i) {
    conv_sum += conv[i];
    loo_sum += loo[i];
  }
  const double nn = static_cast<double>(big_n);
  const double j_norm = std::pow(4.0 * kPi * b * b, 0.5 * n);
  const double k_norm = std::pow(2.0 * kPi, 0.5 * n) * std::pow(b, n) * (nn - 1.0);
  return conv_sum / (nn * nn * j_norm) - 2.0 / nn * loo_sum / k_norm;
}

double silverman_bandwidth(const SampleMatrix& points) {
  require_kde_sample(points);
  const auto mean = column_means(points);
  double var_sum = 0.0;
  for (std::size_t r = 0; r < points.rows(); ++r)
    for (std::size_t c = 0; c < points.cols(); ++c) {
      const double d = points(r, c) - mean[c];
      var_sum += d * d;
    }
  const double sigma = std::sqrt(
      var_sum / static_cast<double>((points.rows() - 1) * points.cols()));
  if (!(sigma > 0.0)) {
    throw NumericalError("all samples are identical; entropy is -infinity");
  }
  return sigma * std::pow(static_cast<double>(points.rows()),
                          -1.0 / (static_cast<double>(points.cols()) + 4.0));
}

Bandwidth select_bandwidth_ml(const SampleMatrix& points) {
  auto bw = golden_section_min(points, [&](double b) { return -kde_ml_objective(points, b); });
  bw.objective = -bw.objective;
  return bw;
}

Bandwidth select_bandwidth_lse(const SampleMatrix& points) {
  return golden_section_min(points, [&](double b) { return kde_lse_objective(points, b); });
}

EntropyEstimate entropy_kde(const SampleMatrix& points, double b, EntropyMethod tag) {
  require_kde_sample(points);
  auto logs = loo_log_densities(points, b);
  const double floor = std::log(kMinDensity);
  std::size_t clamped = 0;
  for (double& v : logs) {
    if (!(v >= floor)) {
      v = floor;
      ++clamped;
    }
    v = -v;
  }
  return estimate_from_contributions(logs, tag, clamped);
}

EntropyEstimate entropy_kde_ml(const SampleMatrix& points) {
  if (points.rows() < 10) throw ValidationError("entropy_kde_ml: needs N >= 10");
  return entropy_kde(points, select_bandwidth_ml(points).b, EntropyMethod::kKdeMl);
}

EntropyEstimate entropy_kde_lse(const SampleMatrix& points) {
  if (points.rows() < 10) throw ValidationError("entropy_kde_lse: needs N >= 10");
  return entropy_kde(points, select_bandwidth_lse(points).b, EntropyMethod::kKdeLse);
}

}  // namespace infocomp
