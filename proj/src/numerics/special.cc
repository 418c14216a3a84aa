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

#include "infocomp/numerics/special.h"

#include <cmath>
#include <string>

#include "infocomp/errors.h"

namespace infocomp {

double log_unit_ball_volume(std::size_t n) {
  if (n == 0) throw ValidationError("unit ball dimension must be >= 1");
  const double half = 0.5 * static_cast<double>(n);
  return half * std::log(kPi) - std::lgamma(half + 1.0);
}

double unit_ball_volume(std::size_t n) {
  if (n == 0 || n > 64) return std::exp(log_unit_ball_volume(n));
  // V_n = 2 pi / n * V_{n-2}, exact in the first few dimensions.
  double v = n % 2 ? 2.0 : 1.0;
  for (std::size_t m = n % 2 ? 3 : 2; m <= n; m += 2) v *= 2.0 * kPi / static_cast<double>(m);
  return v;
}

double digamma(double x) {
  if (!(x > 0.0) || !std::isfinite(x)) {
    throw ValidationError("digamma: argument must be positive and finite, got " +
                          std::to_string(x));
  }
  double shift = 0.0;
  while (x < 6.0) {
    shift -= 1.0 / x;
    x += 1.0;
  }
  // Asymptotic expansion in 1/x^2 with Bernoulli-number coefficients.
  const double inv = 1.0 / x;
  const double inv2 = inv * inv;
  const double series =
      inv2 * (1.0 / 12 -
              inv2 * (1.0 / 120 -
                      inv2 * (1.0 / 252 -
                              inv2 * (1.0 / 240 -
                                      inv2 * (1.0 / 132 -
                                              inv2 * (691.0 / 32760 -
                                                      inv2 / 12.0))))));
  return shift + std::log(x) - 0.5 * inv - series;
}

}  // namespace infocomp
