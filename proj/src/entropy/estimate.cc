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

#include "infocomp/entropy/estimate.h"

#include <cmath>
#include <string>

#include "infocomp/entropy/kde.h"
#include "infocomp/entropy/knn.h"
#include "infocomp/errors.h"

namespace infocomp {

namespace {

constexpr double kZ95 = 1.959963984540054;

}  // namespace

std::string_view method_name(EntropyMethod method) {
  switch (method) {
    case EntropyMethod::kKdeMl:
      return "kde_ml";
    case EntropyMethod::kKdeLse:
      return "kde_lse";
    case EntropyMethod::kKl:
      return "kl";
    case EntropyMethod::kWkl:
      return "wkl";
  }
  return "unknown";
}

EntropyMethod parse_entropy_method(std::string_view name) {
  for (auto m : {EntropyMethod::kKdeMl, EntropyMethod::kKdeLse, EntropyMethod::kKl,
                 EntropyMethod::kWkl}) {
    if (name == method_name(m)) return m;
  }
  throw ValidationError("unknown estimator '" + std::string(name) +
                        "'; valid names: kde_ml, kde_lse, kl, wkl");
}

EntropyEstimate estimate_from_contributions(std::span<const double> contributions,
                                            EntropyMethod method,
                                            std::size_t clamped) {
  const std::size_t n = contributions.size();
  if (n == 0) throw ValidationError("no contributions to average");
  double sum = 0.0;
  for (double c : contributions) sum += c;
  const double mean = sum / static_cast<double>(n);
  double ss = 0.0;
  for (double c : contributions) ss += (c - mean) * (c - mean);
  const double sd = n > 1 ? std::sqrt(ss / static_cast<double>(n - 1)) : 0.0;
  const double half = kZ95 * sd / std::sqrt(static_cast<double>(n));
  if (!std::isfinite(mean)) throw NumericalError("entropy estimate is not finite");
  return EntropyEstimate{mean, mean - half, mean + half, n, method, clamped};
}

std::size_t min_samples(const EstimatorConfig& config) {
  switch (config.method) {
    case EntropyMethod::kKdeMl:
    case EntropyMethod::kKdeLse:
      return 10;
    case EntropyMethod::kKl:
      return 2;
    case EntropyMethod::kWkl:
      return config.k + 1;
  }
  return 2;
}

EntropyEstimate estimate_entropy(const SampleMatrix& points,
                                 const EstimatorConfig& config) {
  switch (config.method) {
    case EntropyMethod::kKdeMl:
      return entropy_kde_ml(points);
    case EntropyMethod::kKdeLse:
      return entropy_kde_lse(points);
    case EntropyMethod::kKl:
      return entropy_kl(points);
    case EntropyMethod::kWkl:
      return entropy_wkl(points, config.k);
  }
  throw ValidationError("unhandled entropy method");
}

}  // namespace infocomp
