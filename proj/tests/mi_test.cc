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

#include <cmath>
#include <numeric>
#include <vector>

#include "gtest/gtest.h"
#include "infocomp/compress/encoder.h"
#include "infocomp/errors.h"
#include "infocomp/mi/mutual_information.h"
#include "infocomp/numerics/gaussian.h"
#include "infocomp/numerics/linalg.h"
#include "infocomp/numerics/rng.h"
#include "infocomp/numerics/special.h"

namespace infocomp {
namespace {

const EstimatorConfig kWkl{EntropyMethod::kWkl, 5};

SampleMatrix normal_cloud(std::size_t n, std::size_t d, std::uint64_t seed) {
  Rng rng(seed);
  SampleMatrix m(n, d);
  for (double& v : m.data()) v = rng.normal();
  return m;
}

SampleMatrix correlated_pair(double a, std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return sample_gaussian(Matrix{{1.0, a}, {a, 1.0}}, n, rng);
}

TEST(MiContinuousTest, IndependentPair) {
  const auto est = mi_continuous(normal_cloud(5000, 1, 1), normal_cloud(5000, 1, 2), kWkl);
  EXPECT_NEAR(est.value, 0.0, 0.1);
}

TEST(MiContinuousTest, CorrelatedPair) {
  const auto xy = correlated_pair(0.7951, 5000, 3);
  const auto est = mi_continuous(select_columns(xy, 0, 1), select_columns(xy, 1, 1), kWkl);
  EXPECT_NEAR(-0.5 * std::log(1.0 - 0.7951 * 0.7951), 0.5, 1e-4);
  EXPECT_NEAR(est.value, 0.5, 0.15);
  EXPECT_LE(est.ci_low, est.value);
  EXPECT_GE(est.ci_high, est.value);
}

TEST(MiContinuousTest, ShuffleDestroysDependence) {
  const auto xy = correlated_pair(0.9, 5000, 4);
  const auto x = select_columns(xy, 0, 1);
  std::vector<std::size_t> perm(5000);
  std::iota(perm.begin(), perm.end(), 0);
  Rng rng(5);
  rng.shuffle(std::span<std::size_t>(perm));
  const auto y = select_rows(select_columns(xy, 1, 1), perm);
  EXPECT_NEAR(mi_continuous(x, y, kWkl).value, 0.0, 0.1);
}

TEST(MiContinuousTest, ValueIsExactCombination) {
  const auto xy = correlated_pair(0.5, 800, 6);
  const auto est = mi_continuous(select_columns(xy, 0, 1), select_columns(xy, 1, 1), kWkl);
  ASSERT_EQ(est.components.size(), 3u);
  double v = 0.0;
  for (std::size_t i = 0; i < 3; ++i) v += est.weights[i] * est.components[i].value;
  EXPECT_EQ(v, est.value);
}

TEST(MiContinuousTest, Symmetric) {
  const auto xy = correlated_pair(0.6, 2000, 7);
  const auto x = select_columns(xy, 0, 1);
  const auto y = select_columns(xy, 1, 1);
  for (auto method : {EntropyMethod::kKl, EntropyMethod::kWkl}) {
    EXPECT_NEAR(mi_continuous(x, y, {method, 5}).value, mi_continuous(y, x, {method, 5}).value,
                1e-9);
  }
}

TEST(MiContinuousTest, NonnegativeOnDependentData) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto xy = correlated_pair(0.3, 1000, 100 + seed);
    const auto est = mi_continuous(select_columns(xy, 0, 1), select_columns(xy, 1, 1), kWkl);
    EXPECT_GT(est.value, -2.0 * est.half_width());
  }
}

TEST(MiContinuousTest, StandardizationCancels) {
  Rng rng(8);
  const Matrix cov{{1, 0, 0.5, 0}, {0, 1, 0, 0.4}, {0.5, 0, 1, 0}, {0, 0.4, 0, 1}};
  const auto joint = sample_gaussian(cov, 3000, rng);
  const auto x = select_columns(joint, 0, 2);
  const auto y = select_columns(joint, 2, 2);
  const double dx[2] = {7.0, 0.01};
  const double dy[2] = {0.3, 250.0};
  SampleMatrix sx = x, sy = y;
  for (std::size_t r = 0; r < x.rows(); ++r) {
    for (std::size_t c = 0; c < 2; ++c) {
      sx(r, c) *= dx[c];
      sy(r, c) *= dy[c];
    }
  }
  const double log_dx = std::log(dx[0]) + std::log(dx[1]);
  const double log_dy = std::log(dy[0]) + std::log(dy[1]);
  for (auto method : {EntropyMethod::kKl, EntropyMethod::kWkl}) {
    const auto base = mi_continuous(x, y, {method, 5});
    const auto scaled = mi_continuous(sx, sy, {method, 5});
    EXPECT_NEAR(scaled.value, base.value, 1e-9);
    EXPECT_NEAR(scaled.components[0].value - base.components[0].value, log_dx, 1e-9);
    EXPECT_NEAR(scaled.components[1].value - base.components[1].value, log_dy, 1e-9);
    EXPECT_NEAR(scaled.components[2].value - base.components[2].value, log_dx + log_dy, 1e-9);
  }
}

TEST(MiContinuousTest, RejectsMismatchedRows) {
  EXPECT_THROW(mi_continuous(normal_cloud(10, 1, 1), normal_cloud(11, 1, 2), kWkl),
               ValidationError);
}

TEST(MiDiscreteTest, SignLabel) {
  const auto x = normal_cloud(10000, 1, 9);
  std::vector<int> labels(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) labels[i] = x(i, 0) > 0.0 ? 1 : 0;
  EXPECT_NEAR(mi_discrete(x, labels, kWkl).value, std::log(2.0), 0.05);
}

TEST(MiDiscreteTest, IndependentLabels) {
  const auto x = normal_cloud(10000, 1, 10);
  Rng rng(11);
  std::vector<int> labels(x.rows());
  for (int& l : labels) l = static_cast<int>(rng.uniform_index(2));
  EXPECT_NEAR(mi_discrete(x, labels, kWkl).value, 0.0, 0.05);
}

// I(X;Y) for 10 unit-variance clusters on a line, spacing 6, by quadrature of
// H(Y) - E_x H(Y | X = x) over the 1-D marginal.
double cluster_mi_oracle(double spacing) {
  const int k = 10;
  const double lo = -12.0, hi = spacing * (k - 1) + 12.0;
  const int steps = 200000;
  const double h = (hi - lo) / steps;
  double cond = 0.0;
  for (int s = 0; s <= steps; ++s) {
    const double x = lo + s * h;
    double dens[10];
    double total = 0.0;
    for (int c = 0; c < k; ++c) {
      const double d = x - spacing * c;
      dens[c] = std::exp(-0.5 * d * d) / std::sqrt(2.0 * kPi) / k;
      total += dens[c];
    }
    double ent = 0.0;
    for (int c = 0; c < k; ++c) {
      const double p = dens[c] / total;
      if (p > 0.0) ent -= p * std::log(p);
    }
    const double wgt = (s == 0 || s == steps) ? 0.5 : 1.0;
    cond += wgt * h * total * ent;
  }
  return std::log(10.0) - cond;
}

TEST(MiDiscreteTest, SeparatedClusters) {
  const double oracle = cluster_mi_oracle(6.0);
  EXPECT_LT(std::log(10.0) - oracle, 0.01);
  Rng rng(12);
  SampleMatrix x(10000, 2);
  std::vector<int> labels(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) {
    labels[i] = static_cast<int>(i % 10);
    x(i, 0) = 6.0 * labels[i] + rng.normal();
    x(i, 1) = rng.normal();
  }
  EXPECT_NEAR(mi_discrete(x, labels, kWkl).value, std::log(10.0), 0.1);
}

TEST(MiDiscreteTest, AgreesWithContinuousPathOnJitteredLabels) {
  // Y + U with U ~ Uniform[0, 0.5) keeps Y recoverable, so both paths
  // target the same I(X;Y).
  Rng rng(13);
  const std::size_t n = 6000;
  SampleMatrix x(n, 1), y(n, 1);
  std::vector<int> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = static_cast<int>(rng.uniform_index(3));
    x(i, 0) = 1.5 * labels[i] + rng.normal();
    y(i, 0) = labels[i] + 0.5 * rng.uniform();
  }
  const auto disc = mi_discrete(x, labels, kWkl);
  const auto cont = mi_continuous(x, y, kWkl);
  EXPECT_NEAR(disc.value, cont.value, disc.half_width() + cont.half_width());
}

TEST(MiDiscreteTest, SmallClassIsNamed) {
  const auto x = normal_cloud(50, 1, 14);
  std::vector<int> labels(50, 0);
  labels[3] = 7;
  try {
    mi_discrete(x, labels, kWkl);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("class 7"), std::string::npos);
  }
}

TEST(MiDiscreteTest, CiCombinesClassTerms) {
  const auto x = normal_cloud(3000, 1, 15);
  std::vector<int> labels(x.rows());
  for (std::size_t i = 0; i < x.rows(); ++i) labels[i] = static_cast<int>(i % 3);
  const auto est = mi_discrete(x, labels, kWkl);
  ASSERT_EQ(est.components.size(), 4u);
  double var = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    var += std::pow(est.weights[i] * est.components[i].half_width(), 2);
  }
  EXPECT_NEAR(est.half_width(), std::sqrt(var), 1e-12);
  EXPECT_NEAR(est.weights[1] + est.weights[2] + est.weights[3], -1.0, 1e-15);
}

TEST(MiCompressedTest, IdentityEncoderIsTransparent) {
  const auto xy = correlated_pair(0.7, 1000, 16);
  const auto x = select_columns(xy, 0, 1);
  const auto y = select_columns(xy, 1, 1);
  IdentityEncoder id;
  const auto a = mi_compressed(x, y, id, &id, kWkl);
  const auto b = mi_continuous(x, y, kWkl);
  EXPECT_EQ(a.value, b.value);
  EXPECT_EQ(a.ci_low, b.ci_low);
  EXPECT_EQ(a.reconstruction_mse_x, 0.0);
}

TEST(MiCompressedTest, OrthogonalEmbeddingThenPca) {
  Rng rng(17);
  const double a = std::sqrt(1.0 - std::exp(-1.0));
  const Matrix cov{{1, 0, a, 0}, {0, 1, 0, a}, {a, 0, 1, 0}, {0, a, 0, 1}};
  const auto joint = sample_gaussian(cov, 5000, rng);
  const auto x = select_columns(joint, 0, 2);
  const auto y = select_columns(joint, 2, 2);
  const Matrix embed = random_orthonormal_columns(16, 2, rng);
  const SampleMatrix x16 = x * embed.transpose();
  const PcaEncoder pca(pca_fit(x16, 2));
  const auto base = mi_continuous(x, y, kWkl);
  const auto comp = mi_compressed(x16, y, pca, nullptr, kWkl);
  EXPECT_NEAR(comp.value, base.value, 0.1);
  EXPECT_LT(comp.reconstruction_mse_x, 1e-20);
}

TEST(MiCompressedTest, LinearCompressionCanDestroyInformation) {
  const double kappa = 1.0;
  const double sigma = 0.5;
  const double a = std::sqrt(1.0 - std::exp(-2.0 * kappa));
  const double c = a * std::sqrt(sigma);
  const Matrix cov{{1, 0, 0}, {0, sigma, c}, {0, c, 1}};
  EXPECT_NEAR(gaussian_mi(cov, 2), kappa, 1e-9);
  Rng rng(18);
  const auto joint = sample_gaussian(cov, 10000, rng);
  const auto x = select_columns(joint, 0, 2);
  const auto y = select_columns(joint, 2, 1);
  EXPECT_NEAR(mi_continuous(x, y, kWkl).value, 1.0, 0.25);
  const PcaEncoder pca(pca_fit(x, 1));
  EXPECT_LE(mi_compressed(x, y, pca, nullptr, kWkl).value, 0.05);
}

TEST(MiCompressedTest, WarnsOnWideLatent) {
  const auto x = normal_cloud(200, 9, 19);
  const auto y = normal_cloud(200, 1, 20);
  IdentityEncoder id;
  const auto est = mi_compressed(x, y, id, nullptr, {EntropyMethod::kKl, 1});
  ASSERT_FALSE(est.warnings.empty());
  EXPECT_NE(est.warnings.back().find("latent dimension 9"), std::string::npos);
}

TEST(DiscreteMiTest, ExactValues) {
  std::vector<int> a(1000), b(1000);
  for (int i = 0; i < 1000; ++i) {
    a[i] = i % 10;
    b[i] = i % 10;
  }
  EXPECT_NEAR(discrete_mi(a, b), std::log(10.0), 1e-12);
  // Full balanced product design: exactly independent.
  for (int i = 0; i < 1000; ++i) b[i] = (i / 10) % 4;
  std::vector<int> a2(1000);
  for (int i = 0; i < 1000; ++i) a2[i] = i % 10;
  EXPECT_NEAR(discrete_mi(std::vector<int>(a2.begin(), a2.begin() + 40),
                          std::vector<int>(b.begin(), b.begin() + 40)),
              0.0, 1e-12);
}

TEST(StandardizeTest, ZeroVarianceColumnOnlyCentred) {
  SampleMatrix x{{1.0, 5.0}, {3.0, 5.0}};
  std::vector<double> scales;
  const auto z = standardize_columns(x, &scales);
  EXPECT_EQ(scales[1], 1.0);
  EXPECT_EQ(z(0, 1), 0.0);
  EXPECT_NEAR(z(0, 0), -1.0, 1e-15);
}

}  // namespace
}  // namespace infocomp
