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

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "gtest/gtest.h"
#include "infocomp/entropy/estimate.h"
#include "infocomp/entropy/kde.h"
#include "infocomp/entropy/knn.h"
#include "infocomp/errors.h"
#include "infocomp/numerics/rng.h"
#include "infocomp/numerics/special.h"

namespace infocomp {
namespace {

constexpr double kHalfLog2PiE = 1.4189385332046727;

SampleMatrix normal_cloud(std::size_t n, std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  SampleMatrix m(n, d);
  for (double& v : m.data()) v = rng.normal();
  return m;
}

SampleMatrix uniform_cloud(std::size_t n, std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  SampleMatrix m(n, d);
  for (double& v : m.data()) v = rng.uniform();
  return m;
}

SampleMatrix affine(const SampleMatrix& x, double scale, double shift) {
  SampleMatrix out = x;
  for (double& v : out.data()) v = scale * v + shift;
  return out;
}

// Adaptive Simpson quadrature; test-only oracle.
double simpson(const std::function<double(double)>& f, double a, double b,
               double fa, double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  if (depth <= 0 || std::abs(left + right - whole) <= 15.0 * tol) {
    return left + right + (left + right - whole) / 15.0;
  }
  return simpson(f, a, m, fa, flm, fm, left, tol / 2, depth - 1) +
         simpson(f, m, b, fm, frm, fb, right, tol / 2, depth - 1);
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol) {
  // Fixed panels first so a narrow peak cannot hide between sample points.
  constexpr int kPanels = 64;
  const double h = (b - a) / kPanels;
  double total = 0.0;
  for (int p = 0; p < kPanels; ++p) {
    const double lo = a + p * h;
    const double hi = lo + h;
    const double fa = f(lo), fb = f(hi), fm = f(0.5 * (lo + hi));
    const double whole = h / 6.0 * (fa + 4.0 * fm + fb);
    total += simpson(f, lo, hi, fa, fm, fb, whole, tol / kPanels, 40);
  }
  return total;
}

double std_kernel_1d(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi); }

TEST(KdeTest, LooDensityTwoCoincidentPoints) {
  for (double b : {0.3, 1.0, 2.5}) {
    const SampleMatrix pts{{1.0, -2.0}, {1.0, -2.0}};
    EXPECT_NEAR(kde_loo_density(pts, b, 0), 1.0 / (2.0 * kPi * b * b), 1e-14);
  }
}

TEST(KdeTest, LooDensityColinear) {
  const SampleMatrix pts{{0.0}, {1.0}, {2.0}};
  const double expected = std::exp(-0.5) / std::sqrt(2.0 * kPi);
  EXPECT_NEAR(kde_loo_density(pts, 1.0, 1), expected, 1e-15);
  EXPECT_NEAR(kde_loo_density(pts, 1.0, 1), 0.2420, 1e-4);
  // The batched path agrees.
  EXPECT_NEAR(kde_loo_densities(pts, 1.0)[1], expected, 1e-15);
}

TEST(KdeTest, LooDensityFlattensForHugeBandwidth) {
  const SampleMatrix pts{{0.0}, {1.0}, {2.0}};
  EXPECT_LT(kde_loo_density(pts, 1e6, 0), 1e-6);
}

TEST(KdeTest, LooDensityUnderflowIsClamped) {
  const SampleMatrix pts{{0.0}, {1000.0}};
  std::size_t clamped = 0;
  EXPECT_EQ(kde_loo_density(pts, 1.0, 0, &clamped), kMinDensity);
  EXPECT_EQ(clamped, 1u);
}

TEST(KdeTest, BatchedDensitiesMatchDirectSum) {
  const auto pts = normal_cloud(400, 2, 3);
  for (double b : {0.05, 0.3, 2.0}) {
    const auto batch = kde_loo_densities(pts, b);
    for (std::size_t i = 0; i < pts.rows(); i += 37) {
      const double direct = kde_loo_density(pts, b, i);
      EXPECT_NEAR(batch[i], direct, 1e-12 * direct) << "b=" << b;
    }
  }
}

TEST(KdeTest, ConvolutionKernelAtZero) {
  const std::vector<double> zero{0.0};
  EXPECT_NEAR(lse_convolution_kernel(zero, 1.0), 1.0 / (2.0 * std::sqrt(kPi)), 1e-15);
  EXPECT_NEAR(lse_convolution_kernel(zero, 1.0), 0.2821, 1e-4);
}

TEST(KdeTest, ConvolutionKernelMatchesQuadrature) {
  Rng rng(41);
  for (int trial = 0; trial < 6; ++trial) {
    const double b = 0.3 + 1.5 * rng.uniform();
    // n = 1
    const double xi = 3.0 * rng.normal();
    const auto integrand1 = [&](double x) {
      return std_kernel_1d(x / b) * std_kernel_1d((x - xi) / b) / (b * b);
    };
    const double q1 = integrate(integrand1, -20.0 * b - std::abs(xi),
                                20.0 * b + std::abs(xi), 1e-14);
    const std::vector<double> v1{xi};
    EXPECT_NEAR(lse_convolution_kernel(v1, b) / q1, 1.0, 1e-6);

    // n = 2: the integrand factorizes over coordinates, but integrate the
    // full product with nested quadrature anyway.
    const double xa = 2.0 * rng.normal();
    const double xb = 2.0 * rng.normal();
    const double lim = 12.0 * b + std::max(std::abs(xa), std::abs(xb));
    const auto outer = [&](double x0) {
      const auto inner = [&](double x1) {
        return std_kernel_1d(x0 / b) * std_kernel_1d(x1 / b) *
               std_kernel_1d((x0 - xa) / b) * std_kernel_1d((x1 - xb) / b) /
               std::pow(b, 4.0);
      };
      return integrate(inner, -lim, lim, 1e-13);
    };
    const double q2 = integrate(outer, -lim, lim, 1e-12);
    const std::vector<double> v2{xa, xb};
    EXPECT_NEAR(lse_convolution_kernel(v2, b) / q2, 1.0, 1e-6);
  }
}

TEST(KdeTest, MlRecoversStandardNormal) {
  const auto est = entropy_kde_ml(normal_cloud(10000, 1, 101));
  EXPECT_NEAR(est.value, kHalfLog2PiE, 0.1);
  EXPECT_LE(est.ci_low, est.value);
  EXPECT_GE(est.ci_high, est.value);
}

TEST(KdeTest, MlRecoversUniform) {
  EXPECT_NEAR(entropy_kde_ml(uniform_cloud(10000, 1, 102)).value, 0.0, 0.1);
}

TEST(KdeTest, MlRecoversBivariateNormal) {
  EXPECT_NEAR(entropy_kde_ml(normal_cloud(5000, 2, 103)).value, 2 * kHalfLog2PiE, 0.15);
}

TEST(KdeTest, LseRecoversStandardNormal) {
  EXPECT_NEAR(entropy_kde_lse(normal_cloud(10000, 1, 104)).value, kHalfLog2PiE, 0.15);
}

TEST(KdeTest, RejectsDegenerateInput) {
  EXPECT_THROW(entropy_kde_ml(SampleMatrix(20, 1, 3.0)), NumericalError);
  EXPECT_THROW(entropy_kde_ml(normal_cloud(5, 1, 1)), ValidationError);
}

TEST(KdeTest, TranslationInvariance) {
  const auto x = normal_cloud(2000, 2, 105);
  const auto shifted = affine(x, 1.0, 5.0);
  EXPECT_NEAR(entropy_kde_ml(shifted).value, entropy_kde_ml(x).value, 1e-10);
  EXPECT_NEAR(entropy_kde_lse(shifted).value, entropy_kde_lse(x).value, 1e-10);
}

TEST(KlTest, RecoversStandardNormal) {
  EXPECT_NEAR(entropy_kl(normal_cloud(10000, 1, 201)).value, kHalfLog2PiE, 0.05);
}

TEST(KlTest, RecoversTrivariateNormal) {
  EXPECT_NEAR(entropy_kl(normal_cloud(10000, 3, 202)).value, 3 * kHalfLog2PiE, 0.1);
}

TEST(KlTest, AffineScalingShiftsByLogScale) {
  const auto x = normal_cloud(10000, 1, 203);
  const double base = entropy_kl(x).value;
  EXPECT_NEAR(entropy_kl(affine(x, 2.0, 5.0)).value - base, std::log(2.0), 0.02);
}

TEST(KlTest, DuplicatesAreClampedAndCounted) {
  SampleMatrix x = normal_cloud(100, 2, 204);
  for (std::size_t c = 0; c < 2; ++c) x(1, c) = x(0, c);
  const auto est = entropy_kl(x);
  EXPECT_EQ(est.clamped, 2u);
  EXPECT_TRUE(std::isfinite(est.value));
}

TEST(WklWeightsTest, Support) {
  EXPECT_EQ(wkl_support(5, 1), (std::vector<std::size_t>{5}));
  EXPECT_EQ(wkl_support(5, 2), (std::vector<std::size_t>{2, 5}));
  EXPECT_EQ(wkl_support(4, 4), (std::vector<std::size_t>{1, 2, 3, 4}));
  EXPECT_EQ(wkl_support(5, 4), (std::vector<std::size_t>{1, 2, 3, 5}));
  EXPECT_EQ(wkl_support(5, 8), (std::vector<std::size_t>{1, 2, 3, 4, 5}));
}

TEST(WklWeightsTest, SingletonSupport) {
  const auto w = solve_wkl_weights(5, 1);
  EXPECT_FALSE(w.fallback);
  EXPECT_EQ(w.w, (std::vector<double>{0, 0, 0, 0, 1}));
}

TEST(WklWeightsTest, TwoFreeCoordinates) {
  const auto w = solve_wkl_weights(5, 2);
  EXPECT_FALSE(w.fallback);
  EXPECT_NEAR(w.w[1], 0.5, 1e-15);
  EXPECT_NEAR(w.w[4], 0.5, 1e-15);
  EXPECT_EQ(w.w[0], 0.0);
  EXPECT_EQ(w.w[2], 0.0);
  EXPECT_EQ(w.w[3], 0.0);
}

TEST(WklWeightsTest, PseudoinverseOracleK4N4) {
  // w^T = b^T (A A^T)^{-1} A with A = [1 1 1 1; g_1 .. g_4], g_j = Gamma(j+1/2)/Gamma(j).
  long double g[4];
  for (int j = 1; j <= 4; ++j) g[j - 1] = std::tgamma(j + 0.5L) / std::tgamma(1.0L * j);
  long double s1 = 0, s2 = 0;
  for (long double v : g) {
    s1 += v;
    s2 += v * v;
  }
  // A A^T = [[4, s1], [s1, s2]]; first column of its inverse.
  const long double det = 4 * s2 - s1 * s1;
  const long double c0 = s2 / det;
  const long double c1 = -s1 / det;
  const auto w = solve_wkl_weights(4, 4);
  ASSERT_FALSE(w.fallback);
  for (int j = 0; j < 4; ++j) {
    EXPECT_NEAR(w.w[j], static_cast<double>(c0 + c1 * g[j]), 1e-12);
  }
}

TEST(WklWeightsTest, ConstraintSystemHolds) {
  for (std::size_t k = 1; k <= 12; ++k) {
    for (std::size_t n = 1; n <= 12; ++n) {
      const auto w = solve_wkl_weights(k, n);
      ASSERT_EQ(w.w.size(), k);
      double sum = 0;
      for (double v : w.w) sum += v;
      EXPECT_NEAR(sum, 1.0, 1e-10) << "k=" << k << " n=" << n;
      if (w.fallback) {
        EXPECT_EQ(w.w[k - 1], 1.0);
        continue;
      }
      const auto support = wkl_support(k, n);
      for (std::size_t j = 1; j <= k; ++j) {
        if (std::find(support.begin(), support.end(), j) == support.end()) {
          EXPECT_EQ(w.w[j - 1], 0.0);
        }
      }
      for (std::size_t l = 1; l <= n / 4; ++l) {
        double s = 0;
        for (std::size_t j = 1; j <= k; ++j) {
          const double shift = 2.0 * static_cast<double>(l) / static_cast<double>(n);
          s += w.w[j - 1] * std::exp(std::lgamma(j + shift) - std::lgamma(1.0 * j));
        }
        EXPECT_NEAR(s, 0.0, 1e-8) << "k=" << k << " n=" << n << " l=" << l;
      }
    }
  }
}

TEST(WklWeightsTest, InfeasibleFallsBack) {
  // k = 2, n = 8: support {1, 2} but three constraints.
  const auto w = solve_wkl_weights(2, 8);
  EXPECT_TRUE(w.fallback);
  EXPECT_EQ(w.w, (std::vector<double>{0, 1}));
}

TEST(WklTest, UnitWeightEqualsKl) {
  for (std::size_t d : {1u, 3u}) {
    const auto x = normal_cloud(1500, d, 300 + d);
    const WklWeights e1{1, d, {1.0}, false};
    EXPECT_NEAR(entropy_wkl(x, e1).value, entropy_kl(x).value, 1e-10);
  }
}

TEST(WklTest, RecoversFourDimensionalNormal) {
  EXPECT_NEAR(entropy_wkl(normal_cloud(5000, 4, 301), 5).value, 4 * kHalfLog2PiE, 0.15);
}

TEST(WklTest, RecoversFourDimensionalUniform) {
  EXPECT_NEAR(entropy_wkl(uniform_cloud(5000, 4, 302), 5).value, 0.0, 0.15);
}

TEST(WklTest, NeedsMoreThanKSamples) {
  EXPECT_THROW(entropy_wkl(normal_cloud(5, 1, 1), 5), ValidationError);
}

TEST(EntropyPropertyTest, TranslationInvarianceKnn) {
  const auto x = normal_cloud(3000, 3, 401);
  const auto shifted = affine(x, 1.0, -7.25);
  EXPECT_NEAR(entropy_kl(shifted).value, entropy_kl(x).value, 1e-10);
  EXPECT_NEAR(entropy_wkl(shifted).value, entropy_wkl(x).value, 1e-10);
}

// Scaling law h(AX) = h(X) + ln|det A| on Gaussian clouds.
TEST(EntropyPropertyTest, LinearMapShiftsByLogDet) {
  // Upper-triangular A with det 2.25.
  const double a00 = 3.0, a01 = 1.0, a11 = 0.75;
  const double log_det = std::log(a00 * a11);
  for (auto method : {EntropyMethod::kKl, EntropyMethod::kWkl, EntropyMethod::kKdeMl,
                      EntropyMethod::kKdeLse}) {
    const bool kde = method == EntropyMethod::kKdeMl || method == EntropyMethod::kKdeLse;
    const auto x = normal_cloud(kde ? 3000 : 10000, 2, 402);
    SampleMatrix ax(x.rows(), 2);
    for (std::size_t r = 0; r < x.rows(); ++r) {
      ax(r, 0) = a00 * x(r, 0) + a01 * x(r, 1);
      ax(r, 1) = a11 * x(r, 1);
    }
    const auto before = estimate_entropy(x, {method, 5});
    const auto after = estimate_entropy(ax, {method, 5});
    const double tol = std::hypot(before.half_width(), after.half_width());
    EXPECT_NEAR(after.value - before.value, log_det, tol) << method_name(method);
  }
}

TEST(EntropyPropertyTest, WklErrorShrinksWithSampleSize) {
  std::vector<double> medians;
  for (std::size_t n : {500u, 2000u, 8000u}) {
    std::vector<double> errors;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto est = entropy_wkl(normal_cloud(n, 2, 1000 + seed), 5);
      errors.push_back(std::abs(est.value - 2 * kHalfLog2PiE));
    }
    std::nth_element(errors.begin(), errors.begin() + 10, errors.end());
    medians.push_back(errors[10]);
  }
  EXPECT_GT(medians[0], medians[1]);
  EXPECT_GT(medians[1], medians[2]);
}

TEST(EntropyPropertyTest, IntervalCoverage) {
  for (auto method : {EntropyMethod::kKl, EntropyMethod::kWkl}) {
    int covered = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto est = estimate_entropy(normal_cloud(2000, 1, 5000 + seed), {method, 5});
      if (est.ci_low <= kHalfLog2PiE && kHalfLog2PiE <= est.ci_high) ++covered;
    }
    EXPECT_GE(covered, 160) << method_name(method);
  }
}

TEST(EntropyPropertyTest, IntervalShrinksWithSampleSize) {
  const auto small = entropy_wkl(normal_cloud(1000, 2, 7));
  const auto large = entropy_wkl(normal_cloud(4000, 2, 8));
  // O(N^{-1/2}): quadrupling N roughly halves the interval.
  EXPECT_NEAR(large.half_width() / small.half_width(), 0.5, 0.1);
}

TEST(EstimatorSelectionTest, ParsesNames) {
  EXPECT_EQ(parse_entropy_method("wkl"), EntropyMethod::kWkl);
  EXPECT_EQ(parse_entropy_method("kde_lse"), EntropyMethod::kKdeLse);
  EXPECT_THROW(parse_entropy_method("mine"), ValidationError);
  EXPECT_EQ(min_samples({EntropyMethod::kWkl, 5}), 6u);
}

}  // namespace
}  // namespace infocomp
