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

#ifndef INFOCOMP_SYNTH_BENCHMARK_H_
#define INFOCOMP_SYNTH_BENCHMARK_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "infocomp/compress/autoencoder.h"
#include "infocomp/entropy/estimate.h"
#include "infocomp/mi/mutual_information.h"
#include "infocomp/synth/embedding.h"

namespace infocomp {

// What the estimator is run on at each grid point:
//   raw_latent         (xi, eta) themselves
//   structured_latent  the squashed shape parameters of both sides
//   compressed         codes of the embedded samples
//   uncompressed       the embedded samples as they are
enum class BenchmarkVariant { kRawLatent, kStructuredLatent, kCompressed, kUncompressed };

std::string_view variant_name(BenchmarkVariant v);
BenchmarkVariant parse_variant(std::string_view name);

enum class CompressorKind { kPca, kAutoencoder };

struct BenchmarkConfig {
  std::vector<double> kappas{0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0};
  std::size_t samples = 5000;
  EmbeddingSpec embedding;
  std::vector<BenchmarkVariant> variants{BenchmarkVariant::kRawLatent,
                                         BenchmarkVariant::kStructuredLatent,
                                         BenchmarkVariant::kCompressed};
  CompressorKind compressor = CompressorKind::kPca;
  // Code size per side; 0 means the embedding's latent dimension.
  std::size_t code_dim = 0;
  // Autoencoder hidden widths between the input and the code.
  std::vector<std::size_t> ae_hidden{64};
  TrainConfig ae_train;
  EstimatorConfig estimator;
  std::uint64_t seed = 0;
};

struct BenchmarkRow {
  double true_mi = 0.0;
  BenchmarkVariant variant = BenchmarkVariant::kRawLatent;
  MiEstimate estimate;
  std::uint64_t seed = 0;
  // Set when this row could not be estimated; estimate values are NaN then.
  bool failed = false;
  std::string note;
};

// One row per (kappa, variant), in grid order then variant order.
std::vector<BenchmarkRow> run_benchmark(const BenchmarkConfig& config);

// Mean squared error of the estimates against true_mi over the successful
// rows of one variant. NaN if there are none.
double grid_mse(const std::vector<BenchmarkRow>& rows, BenchmarkVariant variant);

}  // namespace infocomp

#endif  // INFOCOMP_SYNTH_BENCHMARK_H_
