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

#ifndef VGPMIL_COUPLING_HPP_
#define VGPMIL_COUPLING_HPP_

#include <Eigen/Dense>
#include <vector>

#include "vgpmil/bag.hpp"

namespace vgpmil {

// Which grid cells count as contiguous. FourConnected (edge-sharing) is the
// default; EightConnected additionally couples diagonal neighbors and is
// exposed for experimentation only.
enum class Neighborhood { kFourConnected, kEightConnected };

// Graph Laplacian C_b of the patch-contiguity graph: degree on the diagonal,
// -1 for each contiguous pair, every row summing to zero. Instances with no
// neighbors contribute zero rows. Values are integral, stored as doubles for
// downstream algebra.
Eigen::MatrixXd build_coupling(
    const Bag& bag, Neighborhood nb = Neighborhood::kFourConnected);

// Coupled covariance Sigma_b = (lambda C_b + I)^{-1}, the Gaussian that the
// Ising-style quadratic penalty induces on a bag's augmented variables.
// Exactly the identity when lambda = 0; otherwise solved via Cholesky
// (lambda C_b + I is SPD for all lambda >= 0) and explicitly symmetrized.
Eigen::MatrixXd coupled_covariance(const Eigen::MatrixXd& coupling,
                                   double lambda);

// Per-bag Sigma_b blocks for a whole dataset, in dataset bag order. The
// conceptual N x N block-diagonal matrix is never materialized. Bags without
// grid coordinates are rejected when lambda > 0 and treated as uncoupled
// (C_b = 0) when lambda = 0.
std::vector<Eigen::MatrixXd> block_sigma(
    const MilDataset& dataset, double lambda,
    Neighborhood nb = Neighborhood::kFourConnected);

}  // namespace vgpmil

#endif  // VGPMIL_COUPLING_HPP_
