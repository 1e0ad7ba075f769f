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

#ifndef VGPMIL_KMEANS_HPP_
#define VGPMIL_KMEANS_HPP_

#include <Eigen/Dense>
#include <cstdint>

#include "vgpmil/bag.hpp"

namespace vgpmil {

// Lloyd's algorithm with k-means++ seeding. points is n x D; returns k x D
// centroids. Deterministic given the seed: assignment ties go to the lowest
// centroid index and clusters that empty out keep their previous centroid.
Eigen::MatrixXd kmeans(const Eigen::MatrixXd& points, int k,
                       std::uint64_t seed, int max_iters = 25);

// Inducing-point initialization: m/2 centroids from the instances of
// positive bags and m/2 from the instances of negative bags, stacked in that
// order. Instances are gathered in canonical (bag id, instance index) order
// first, so the result depends only on the dataset contents and the seed.
// Requires m even and at least m/2 instances on each side.
Eigen::MatrixXd kmeans_inducing(const MilDataset& dataset, int m,
                                std::uint64_t seed);

}  // namespace vgpmil

#endif  // VGPMIL_KMEANS_HPP_
