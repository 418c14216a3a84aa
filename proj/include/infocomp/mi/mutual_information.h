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

#ifndef INFOCOMP_MI_MUTUAL_INFORMATION_H_
#define INFOCOMP_MI_MUTUAL_INFORMATION_H_

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "infocomp/compress/encoder.h"
#include "infocomp/entropy/estimate.h"
#include "infocomp/numerics/matrix.h"

namespace infocomp {

// Mutual information in nats, assembled from entropy estimates.
// value == sum_i weights[i] * components[i].value exactly.
struct MiEstimate {
  double value = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  EntropyMethod method = EntropyMethod::kWkl;
  // Entropies in the units of the original (unstandardized) data.
  std::vector<EntropyEstimate> components;
  std::vector<double> weights;
  // Mean squared reconstruction error of the encoders used, NaN when none.
  double reconstruction_mse_x = std::numeric_limits<double>::quiet_NaN();
  double reconstruction_mse_y = std::numeric_limits<double>::quiet_NaN();
  std::vector<std::string> warnings;

  double half_width() const { return 0.5 * (ci_high - ci_low); }
};

struct LabeledSamples {
  SampleMatrix features;
  std::vector<int> labels;
};

// Per-coordinate z-scores. Columns with zero variance are only centred.
// scales receives the divisor used for each column.
SampleMatrix standardize_columns(const SampleMatrix& x, std::vector<double>* scales);

// h(x) + h(y) - h([x | y]).
MiEstimate mi_continuous(const SampleMatrix& x, const SampleMatrix& y,
                         const EstimatorConfig& config);

// h(x) - sum_c p(c) h(x | label = c), p the empirical class frequencies.
MiEstimate mi_discrete(const SampleMatrix& x, const std::vector<int>& labels,
                       const EstimatorConfig& config);

// Encoders are applied first; a null y_encoder leaves y untouched.
MiEstimate mi_compressed(const SampleMatrix& x, const SampleMatrix& y,
                         const Encoder& x_encoder, const Encoder* y_encoder,
                         const EstimatorConfig& config);
MiEstimate mi_compressed(const SampleMatrix& x, const std::vector<int>& labels,
                         const Encoder& x_encoder, const EstimatorConfig& config);

// Plug-in MI of two label sequences from their contingency table.
double discrete_mi(const std::vector<int>& a, const std::vector<int>& b);

// Latent sizes at or above this trigger an accuracy warning.
inline constexpr std::size_t kLatentDimWarning = 8;

}  // namespace infocomp

#endif  // INFOCOMP_MI_MUTUAL_INFORMATION_H_
