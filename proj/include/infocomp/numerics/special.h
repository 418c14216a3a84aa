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

#ifndef INFOCOMP_NUMERICS_SPECIAL_H_
#define INFOCOMP_NUMERICS_SPECIAL_H_

#include <cstddef>

namespace infocomp {

inline constexpr double kEulerGamma = 0.57721566490153286060651209;
inline constexpr double kPi = 3.14159265358979323846264338;

// Volume of the unit ball in R^n: pi^(n/2) / Gamma(n/2 + 1).
double unit_ball_volume(std::size_t n);
double log_unit_ball_volume(std::size_t n);

// Psi(x) for x > 0. Throws ValidationError otherwise.
double digamma(double x);

}  // namespace infocomp

#endif  // INFOCOMP_NUMERICS_SPECIAL_H_
