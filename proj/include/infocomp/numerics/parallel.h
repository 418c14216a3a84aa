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

#ifndef INFOCOMP_NUMERICS_PARALLEL_H_
#define INFOCOMP_NUMERICS_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace infocomp {

// Worker cap: INFOCOMP_THREADS if set and positive, else the hardware
// concurrency (at least 1).
std::size_t max_threads();

// Calls fn(i) for every i in [0, n), split into contiguous chunks across up
// to max_threads() workers. fn must only write to slots owned by i; callers
// reduce the results afterwards in index order, so output never depends on
// the thread count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace infocomp

#endif  // INFOCOMP_NUMERICS_PARALLEL_H_
