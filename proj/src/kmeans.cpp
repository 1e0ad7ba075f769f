// Copyright 2026 The vgpmil Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "vgpmil/kmeans.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "vgpmil/errors.hpp"
#include "vgpmil/rng.hpp"

namespace vgpmil {

namespace {

// k-means++ seeding: first center uniform, then proportional to squared
// distance from the nearest chosen center.
Eigen::MatrixXd seed_centroids(const Eigen::MatrixXd& points, int k,
                               Rng& rng) {
  const Eigen::Index n = points.rows();
  Eigen::MatrixXd centroids(k, points.cols());
  centroids.row(0) =
      points.row(static_cast<Eigen::Index>(rng.uniform_index(n)));

  Eigen::VectorXd d2 =
      (points.rowwise() - centroids.row(0)).rowwise().squaredNorm();
  for (int c = 1; c < k; ++c) {
    const double total = d2.sum();
    Eigen::Index pick = 0;
    if (total > 0.0) {
      double target = rng.uniform() * total;
      double acc = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        acc += d2[i];
        if (acc >= target) {
          pick = i;
          break;
        }
        pick = i;
      }
    } else {
      // All points coincide with an existing center.
      pick = static_cast<Eigen::Index>(rng.uniform_index(n));
    }
    centroids.row(c) = points.row(pick);
    d2 = d2.cwiseMin(
        (points.rowwise() - centroids.row(c)).rowwise().squaredNorm());
  }
  return centroids;
}

}  // namespace

Eigen::MatrixXd kmeans(const Eigen::MatrixXd& points, int k,
                       std::uint64_t seed, int max_iters) {
  const Eigen::Index n = points.rows();
  if (k < 1) {
    throw InputError("kmeans: k must be >= 1");
  }
  if (n < k) {
    throw InputError("kmeans: fewer points (" + std::to_string(n) +
                     ") than clusters (" + std::to_string(k) + ")");
  }
  Rng rng(seed);
  Eigen::MatrixXd centroids = seed_centroids(points, k, rng);

  std::vector<Eigen::Index> assign(n, -1);
  for (int iter = 0; iter < max_iters; ++iter) {
    bool changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      Eigen::Index best = 0;
      double best_d2 = std::numeric_limits<double>::infinity();
      for (int c = 0; c < k; ++c) {
        const double d2 = (points.row(i) - centroids.row(c)).squaredNorm();
        if (d2 < best_d2) {  // strict: ties stay with the lower index
          best_d2 = d2;
          best = c;
        }
      }
      if (assign[i] != best) {
        assign[i] = best;
        changed = true;
      }
    }
    if (!changed) break;

    Eigen::MatrixXd sums = Eigen::MatrixXd::Zero(k, points.cols());
    std::vector<Eigen::Index> counts(k, 0);
    for (Eigen::Index i = 0; i < n; ++i) {
      sums.row(assign[i]) += points.row(i);
      ++counts[assign[i]];
    }
    for (int c = 0; c < k; ++c) {
      if (counts[c] > 0) {
        centroids.row(c) = sums.row(c) / static_cast<double>(counts[c]);
      }
    }
  }
  return centroids;
}

Eigen::MatrixXd kmeans_inducing(const MilDataset& dataset, int m,
                                std::uint64_t seed) {
  if (m < 2 || m % 2 != 0) {
    throw InputError("kmeans_inducing: inducing count must be even and >= 2");
  }
  const int half = m / 2;

  // Canonical gather: dataset bags are sorted by id; walking them in order
  // makes the point list independent of original file/bag ordering.
  std::vector<const Bag*> ordered;
  ordered.reserve(dataset.bags.size());
  for (const Bag& b : dataset.bags) ordered.push_back(&b);
  std::sort(ordered.begin(), ordered.end(),
            [](const Bag* a, const Bag* b) { return a->id < b->id; });

  Eigen::Index n_pos = 0, n_neg = 0;
  for (const Bag* b : ordered) {
    (b->label == 1 ? n_pos : n_neg) += b->size();
  }
  if (n_pos < half) {
    throw InputError("kmeans_inducing: positive bags hold " +
                     std::to_string(n_pos) + " instances, need >= " +
                     std::to_string(half));
  }
  if (n_neg < half) {
    throw InputError("kmeans_inducing: negative bags hold " +
                     std::to_string(n_neg) + " instances, need >= " +
                     std::to_string(half));
  }

  Eigen::MatrixXd pos(n_pos, dataset.feature_dim);
  Eigen::MatrixXd neg(n_neg, dataset.feature_dim);
  Eigen::Index ip = 0, in = 0;
  for (const Bag* b : ordered) {
    if (b->label == 1) {
      pos.middleRows(ip, b->size()) = b->features;
      ip += b->size();
    } else {
      neg.middleRows(in, b->size()) = b->features;
      in += b->size();
    }
  }

  Eigen::MatrixXd inducing(m, dataset.feature_dim);
  inducing.topRows(half) = kmeans(pos, half, derive_seed(seed, "kmeans-pos"));
  inducing.bottomRows(half) =
      kmeans(neg, half, derive_seed(seed, "kmeans-neg"));
  return inducing;
}

}  // namespace vgpmil
