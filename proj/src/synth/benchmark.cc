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

#include "infocomp/synth/benchmark.h"

#include <cmath>
#include <limits>
#include <string>

#include "infocomp/compress/encoder.h"
#include "infocomp/errors.h"
#include "infocomp/numerics/rng.h"
#include "infocomp/synth/gaussian_pair.h"

namespace infocomp {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

MiEstimate failed_estimate(EntropyMethod method) {
  MiEstimate e;
  e.value = e.ci_low = e.ci_high = kNaN;
  e.method = method;
  return e;
}

// Fits the configured compressor on one side. Returns null and fills note
// when the autoencoder diverges.
std::unique_ptr<Encoder> fit_compressor(const BenchmarkConfig& config, const SampleMatrix& x,
                                        std::uint64_t seed, std::string& note) {
  const std::size_t code =
      config.code_dim > 0 ? config.code_dim : embedding_latent_dim(config.embedding);
  if (config.compressor == CompressorKind::kPca) {
    return std::make_unique<PcaEncoder>(pca_fit(x, code));
  }
  std::vector<std::size_t> sizes{x.cols()};
  sizes.insert(sizes.end(), config.ae_hidden.begin(), config.ae_hidden.end());
  sizes.push_back(code);
  TrainConfig train = config.ae_train;
  train.seed = seed;
  auto model = ae_train(x, sizes, train);
  if (model.diverged) {
    note = "autoencoder training diverged";
    return nullptr;
  }
  return std::make_unique<AutoencoderEncoder>(std::move(model));
}

}  // namespace

std::string_view variant_name(BenchmarkVariant v) {
  switch (v) {
    case BenchmarkVariant::kRawLatent:
      return "raw_latent";
    case BenchmarkVariant::kStructuredLatent:
      return "structured_latent";
    case BenchmarkVariant::kCompressed:
      return "compressed";
    case BenchmarkVariant::kUncompressed:
      return "uncompressed";
  }
  return "unknown";
}

BenchmarkVariant parse_variant(std::string_view name) {
  for (auto v : {BenchmarkVariant::kRawLatent, BenchmarkVariant::kStructuredLatent,
                 BenchmarkVariant::kCompressed, BenchmarkVariant::kUncompressed}) {
    if (name == variant_name(v)) return v;
  }
  throw ValidationError("unknown variant '" + std::string(name) +
                        "'; valid names: raw_latent, structured_latent, compressed, "
                        "uncompressed");
}

std::vector<BenchmarkRow> run_benchmark(const BenchmarkConfig& config) {
  if (config.kappas.empty()) throw ValidationError("benchmark grid is empty");
  if (config.variants.empty()) throw ValidationError("no benchmark variants requested");
  const std::size_t latent = embedding_latent_dim(config.embedding);
  std::vector<BenchmarkRow> rows;
  for (std::size_t g = 0; g < config.kappas.size(); ++g) {
    const std::uint64_t point_seed = derive_seed(config.seed, {g});
    GaussianPairSpec spec{latent, latent, config.kappas[g], point_seed};
    const GaussianPair pair = sample_gaussian_pair(spec, config.samples);

    SampleMatrix fx, fy;
    auto embedded = [&] {
      if (fx.empty()) {
        fx = embed(pair.xi, config.embedding);
        fy = embed(pair.eta, config.embedding);
      }
    };
    for (const auto variant : config.variants) {
      BenchmarkRow row;
      row.true_mi = pair.true_mi;
      row.variant = variant;
      row.seed = point_seed;
      try {
        switch (variant) {
          case BenchmarkVariant::kRawLatent:
            row.estimate = mi_continuous(pair.xi, pair.eta, config.estimator);
            break;
          case BenchmarkVariant::kStructuredLatent:
            row.estimate = mi_continuous(structured_latent(pair.xi, config.embedding),
                                         structured_latent(pair.eta, config.embedding),
                                         config.estimator);
            break;
          case BenchmarkVariant::kUncompressed:
            embedded();
            row.estimate = mi_continuous(fx, fy, config.estimator);
            break;
          case BenchmarkVariant::kCompressed: {
            embedded();
            auto ex = fit_compressor(config, fx, derive_seed(point_seed, {1}), row.note);
            auto ey = ex ? fit_compressor(config, fy, derive_seed(point_seed, {2}), row.note)
                         : nullptr;
            if (!ex || !ey) {
              row.failed = true;
              break;
            }
            row.estimate = mi_compressed(fx, fy, *ex, ey.get(), config.estimator);
            break;
          }
        }
      } catch (const NumericalError& e) {
        row.failed = true;
        row.note = e.what();
      }
      if (row.failed) row.estimate = failed_estimate(config.estimator.method);
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

double grid_mse(const std::vector<BenchmarkRow>& rows, BenchmarkVariant variant) {
  double s = 0.0;
  std::size_t n = 0;
  for (const auto& r : rows) {
    if (r.variant != variant || r.failed) continue;
    const double d = r.estimate.value - r.true_mi;
    s += d * d;
    ++n;
  }
  return n == 0 ? kNaN : s / static_cast<double>(n);
}

}  // namespace infocomp
