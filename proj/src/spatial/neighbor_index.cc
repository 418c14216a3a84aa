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

#include "infocomp/spatial/neighbor_index.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "infocomp/errors.h"
#include "infocomp/numerics/parallel.h"

namespace infocomp {

namespace {

constexpr std::size_t kLeafSize = 12;

double squared_distance(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    const double d = a[c] - b[c];
    s += d * d;
  }
  return s;
}

void validate_points(const SampleMatrix& points) {
  if (points.rows() < 2) {
    throw ValidationError("neighbor index needs at least 2 points, got " +
                          std::to_string(points.rows()));
  }
  if (points.cols() == 0) throw ValidationError("neighbor index needs dim >= 1");
  if (!points.all_finite()) {
    throw ValidationError("neighbor index: points contain non-finite coordinates");
  }
}

void validate_query(std::size_t n, std::size_t query_id, std::size_t k) {
  if (query_id >= n) throw ValidationError("query id out of range");
  if (k < 1 || k >= n) {
    throw ValidationError("k must be in [1, N-1]; got k=" + std::to_string(k) +
                          " with N=" + std::to_string(n));
  }
}

}  // namespace

// Sorted list of the k best (squared distance, id) pairs seen so far.
class NeighborIndex::KBest {
 public:
  explicit KBest(std::size_t k) : k_(k) {
    d2_.reserve(k + 1);
    ids_.reserve(k + 1);
  }

  double bound() const {
    return d2_.size() < k_ ? std::numeric_limits<double>::infinity() : d2_.back();
  }

  void offer(double d2, std::size_t id) {
    if (d2_.size() == k_ &&
        (d2 > d2_.back() || (d2 == d2_.back() && id > ids_.back()))) {
      return;
    }
    std::size_t pos = d2_.size();
    while (pos > 0 && (d2 < d2_[pos - 1] || (d2 == d2_[pos - 1] && id < ids_[pos - 1]))) {
      --pos;
    }
    d2_.insert(d2_.begin() + static_cast<std::ptrdiff_t>(pos), d2);
    ids_.insert(ids_.begin() + static_cast<std::ptrdiff_t>(pos), id);
    if (d2_.size() > k_) {
      d2_.pop_back();
      ids_.pop_back();
    }
  }

  std::vector<Neighbor> result() const {
    std::vector<Neighbor> out(d2_.size());
    for (std::size_t i = 0; i < d2_.size(); ++i) {
      out[i] = {ids_[i], std::sqrt(d2_[i])};
    }
    return out;
  }

 private:
  std::size_t k_;
  std::vector<double> d2_;
  std::vector<std::size_t> ids_;
};

NeighborIndex::NeighborIndex(SampleMatrix points, Strategy strategy)
    : points_(std::move(points)) {
  validate_points(points_);
  order_.resize(points_.rows());
  std::iota(order_.begin(), order_.end(), 0);
  const bool kd = strategy == Strategy::kKdTree ||
                  (strategy == Strategy::kAuto && dim() <= kMaxKdTreeDim);
  if (kd) {
    nodes_.reserve(2 * points_.rows() / kLeafSize + 2);
    build_node(0, points_.rows());
  }
}

std::size_t NeighborIndex::build_node(std::size_t begin, std::size_t end) {
  const std::size_t id = nodes_.size();
  nodes_.push_back(Node{begin, end});
  if (end - begin <= kLeafSize) return id;

  std::size_t best_dim = 0;
  double best_spread = -1.0;
  for (std::size_t c = 0; c < dim(); ++c) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (std::size_t i = begin; i < end; ++i) {
      const double v = points_(order_[i], c);
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    if (hi - lo > best_spread) {
      best_spread = hi - lo;
      best_dim = c;
    }
  }
  if (best_spread <= 0.0) return id;  // all points coincide

  const std::size_t mid = begin + (end - begin) / 2;
  std::nth_element(order_.begin() + static_cast<std::ptrdiff_t>(begin),
                   order_.begin() + static_cast<std::ptrdiff_t>(mid),
                   order_.begin() + static_cast<std::ptrdiff_t>(end),
                   [&](std::size_t a, std::size_t b) {
                     const double va = points_(a, best_dim);
                     const double vb = points_(b, best_dim);
                     return va < vb || (va == vb && a < b);
                   });
  const double split = points_(order_[mid], best_dim);
  const std::size_t left = build_node(begin, mid);
  const std::size_t right = build_node(mid, end);
  Node& node = nodes_[id];
  node.leaf = false;
  node.split_dim = best_dim;
  node.split_value = split;
  node.left = left;
  node.right = right;
  return id;
}

void NeighborIndex::scan(std::size_t begin, std::size_t end,
                         std::span<const double> query, std::size_t exclude,
                         KBest& best) const {
  for (std::size_t i = begin; i < end; ++i) {
    const std::size_t id = order_[i];
    if (id == exclude) continue;
    best.offer(squared_distance(points_.row(id), query), id);
  }
}

void NeighborIndex::search(std::size_t node_id, std::span<const double> query,
                           std::size_t exclude, KBest& best) const {
  const Node& node = nodes_[node_id];
  if (node.leaf) {
    scan(node.begin, node.end, query, exclude, best);
    return;
  }
  const double diff = query[node.split_dim] - node.split_value;
  const std::size_t near = diff < 0 ? node.left : node.right;
  const std::size_t far = diff < 0 ? node.right : node.left;
  search(near, query, exclude, best);
  // Equality still descends: an equidistant point with a lower id may be there.
  if (diff * diff <= best.bound()) search(far, query, exclude, best);
}

std::vector<Neighbor> NeighborIndex::knn_excluding_self(std::size_t query_id,
                                                        std::size_t k) const {
  validate_query(size(), query_id, k);
  KBest best(k);
  const auto query = points_.row(query_id);
  if (uses_kd_tree()) {
    search(0, query, query_id, best);
  } else {
    scan(0, size(), query, query_id, best);
  }
  return best.result();
}

Matrix NeighborIndex::knn_distances(std::size_t k) const {
  validate_query(size(), 0, k);
  Matrix out(size(), k);
  parallel_for(size(), [&](std::size_t i) {
    const auto nn = knn_excluding_self(i, k);
    for (std::size_t j = 0; j < k; ++j) out(i, j) = nn[j].distance;
  });
  return out;
}

std::vector<Neighbor> brute_force_knn_excluding_self(const SampleMatrix& points,
                                                     std::size_t query_id,
                                                     std::size_t k) {
  validate_points(points);
  validate_query(points.rows(), query_id, k);
  std::vector<std::pair<double, std::size_t>> all;
  all.reserve(points.rows() - 1);
  const auto query = points.row(query_id);
  for (std::size_t i = 0; i < points.rows(); ++i) {
    if (i == query_id) continue;
    all.emplace_back(squared_distance(points.row(i), query), i);
  }
  std::partial_sort(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k),
                    all.end());
  std::vector<Neighbor> out(k);
  for (std::size_t j = 0; j < k; ++j) out[j] = {all[j].second, std::sqrt(all[j].first)};
  return out;
}

}  // namespace infocomp
