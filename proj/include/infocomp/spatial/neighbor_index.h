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

#ifndef INFOCOMP_SPATIAL_NEIGHBOR_INDEX_H_
#define INFOCOMP_SPATIAL_NEIGHBOR_INDEX_H_

#include <cstddef>
#include <span>
#include <vector>

#include "infocomp/numerics/matrix.h"

namespace infocomp {

struct Neighbor {
  std::size_t id;
  double distance;

  friend bool operator==(const Neighbor&, const Neighbor&) = default;
};

// Exact Euclidean k-nearest-neighbour queries over a fixed point set.
//
// Results are ordered by distance, ties broken by the lower point id, and are
// identical to a brute-force scan: both paths accumulate squared distances
// coordinate by coordinate in the same order.
class NeighborIndex {
 public:
  enum class Strategy { kAuto, kKdTree, kBruteForce };

  // kAuto picks the kd-tree up to this dimension and brute force above it.
  static constexpr std::size_t kMaxKdTreeDim = 15;

  explicit NeighborIndex(SampleMatrix points, Strategy strategy = Strategy::kAuto);

  std::size_t size() const { return points_.rows(); }
  std::size_t dim() const { return points_.cols(); }
  bool uses_kd_tree() const { return !nodes_.empty(); }
  const SampleMatrix& points() const { return points_; }

  // The k nearest points to point `query_id`, excluding that point itself.
  // Requires 1 <= k <= size() - 1.
  std::vector<Neighbor> knn_excluding_self(std::size_t query_id,
                                           std::size_t k) const;

  // N x k matrix: entry (i, j) is the distance from point i to its (j+1)-th
  // nearest other point. Queries run in parallel.
  Matrix knn_distances(std::size_t k) const;

 private:
  struct Node {
    std::size_t begin;
    std::size_t end;
    std::size_t split_dim = 0;
    double split_value = 0.0;
    std::size_t left = 0;
    std::size_t right = 0;
    bool leaf = true;
  };
  class KBest;

  std::size_t build_node(std::size_t begin, std::size_t end);
  void search(std::size_t node, std::span<const double> query,
              std::size_t exclude, KBest& best) const;
  void scan(std::size_t begin, std::size_t end, std::span<const double> query,
            std::size_t exclude, KBest& best) const;

  SampleMatrix points_;
  std::vector<std::size_t> order_;
  std::vector<Node> nodes_;
};

// O(N) reference scan with the same ordering contract as NeighborIndex.
std::vector<Neighbor> brute_force_knn_excluding_self(const SampleMatrix& points,
                                                     std::size_t query_id,
                                                     std::size_t k);

}  // namespace infocomp

#endif  // INFOCOMP_SPATIAL_NEIGHBOR_INDEX_H_
