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

#ifndef INFOCOMP_NUMERICS_RNG_H_
#define INFOCOMP_NUMERICS_RNG_H_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>

namespace infocomp {

// SplitMix64 finalizer; used for seeding and for deriving child seeds.
std::uint64_t splitmix64(std::uint64_t& state);

// Deterministic child seed for a labelled sub-stream, e.g.
// derive_seed(seed, {epoch, layer}). Order of the path matters.
std::uint64_t derive_seed(std::uint64_t seed,
                          std::initializer_list<std::uint64_t> path);

// xoshiro256** generator. Every stochastic routine takes one of these by
// reference; the same seed reproduces the same stream bit for bit on any
// platform (no std:: distributions are involved).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();
  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Uniform on (0, 1).
  double uniform_open();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  // Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n);
  // Standard normal via the Marsaglia polar method.
  double normal();

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = uniform_index(i);
      std::swap(items[i - 1], items[j]);
    }
  }

  std::uint64_t seed() const { return seed_; }
  // Number of 64-bit words drawn so far.
  std::uint64_t position() const { return position_; }

 private:
  std::uint64_t seed_;
  std::uint64_t position_ = 0;
  std::uint64_t s_[4];
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace infocomp

#endif  // INFOCOMP_NUMERICS_RNG_H_
