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

#ifndef INFOCOMP_ENTROPY_ESTIMATE_H_
#define INFOCOMP_ENTROPY_ESTIMATE_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "infocomp/numerics/matrix.h"

namespace infocomp {

enum class EntropyMethod { kKdeMl, kKdeLse, kKl, kWkl };

std::string_view method_name(EntropyMethod method);
// Accepts kde_ml | kde_lse | kl | wkl. Throws ValidationError naming the
// valid choices otherwise.
EntropyMethod parse_entropy_method(std::string_view name);

// Differential entropy estimate in nats with a 95% asymptotic interval.
struct EntropyEstimate {
  double value = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::size_t n_samples = 0;
  EntropyMethod method = EntropyMethod::kWkl;
  // Zero neighbour distances or underflowed densities that were clamped.
  std::size_t clamped = 0;

  double half_width() const { return 0.5 * (ci_high - ci_low); }
};

// Builds the estimate from per-sample contributions c_i whose mean is the
// entropy: value = mean(c), interval = value +- 1.96 sd(c) / sqrt(N).
EntropyEstimate estimate_from_contributions(std::span<const double> contributions,
                                            EntropyMethod method,
                                            std::size_t clamped);

struct EstimatorConfig {
  EntropyMethod method = EntropyMethod::kWkl;
  // Neighbour count for WKL.
  std::size_t k = 5;
};

// Smallest sample the configured estimator accepts.
std::size_t min_samples(const EstimatorConfig& config);

EntropyEstimate estimate_entropy(const SampleMatrix& points,
                                 const EstimatorConfig& config);

}  // namespace infocomp

#endif  // INFOCOMP_ENTROPY_ESTIMATE_H_
