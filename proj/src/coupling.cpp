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

#include "vgpmil/coupling.hpp"

#include <map>
#include <string>
#include <utility>

#include "vgpmil/errors.hpp"
#include "vgpmil/linalg.hpp"

namespace vgpmil {

Eigen::MatrixXd build_coupling(const Bag& bag, Neighborhood nb) {
  const Eigen::Index n = bag.size();
  if (!bag.has_coords()) {
    throw InputError("build_coupling: bag '" + bag.id +
                     "' has no grid coordinates");
  }
  if (static_cast<Eigen::Index>(bag.coords.size()) != n) {
    throw InputError("build_coupling: bag '" + bag.id +
                     "' coordinate count does not match instance count");
  }

  std::map<std::pair<int, int>, Eigen::Index> cell_of;
  for (Eigen::Index i = 0; i < n; ++i) {
    auto [it, inserted] =
        cell_of.insert({{bag.coords[i].row, bag.coords[i].col}, i});
    if (!inserted) {
      throw InputError("build_coupling: bag '" + bag.id +
                       "' has duplicate grid cell (" +
                       std::to_string(bag.coords[i].row) + "," +
                       std::to_string(bag.coords[i].col) + ")");
    }
  }

  static constexpr int kFour[4][2] = {{-1, 0}, {1, 0}, {0, -1}, {0, 1}};
  static constexpr int kDiag[4][2] = {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}};

  Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(n, n);
  auto add_edge = [&](Eigen::Index i, Eigen::Index j) {
    // Each undirected edge visited from both endpoints; count it once.
    if (i < j) {
      laplacian(i, j) -= 1.0;
      laplacian(j, i) -= 1.0;
      laplacian(i, i) += 1.0;
      laplacian(j, j) += 1.0;
    }
  };
  for (Eigen::Index i = 0; i < n; ++i) {
    const GridCoord& c = bag.coords[i];
    for (const auto& d : kFour) {
      auto it = cell_of.find({c.row + d[0], c.col + d[1]});
      if (it != cell_of.end()) add_edge(i, it->second);
    }
    if (nb == Neighborhood::kEightConnected) {
      for (const auto& d : kDiag) {
        auto it = cell_of.find({c.row + d[0], c.col + d[1]});
        if (it != cell_of.end()) add_edge(i, it->second);
      }
    }
  }
  return laplacian;
}

Eigen::MatrixXd coupled_covariance(const Eigen::MatrixXd& coupling,
                                   double lambda) {
  if (lambda < 0.0) {
    throw InputError("coupled_covariance: lambda must be non-negative");
  }
  const Eigen::Index n = coupling.rows();
  if (lambda == 0.0) {
    return Eigen::MatrixXd::Identity(n, n);
  }
  Eigen::MatrixXd precision =
      lambda * coupling + Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd sigma =
      psd_solve(precision, Eigen::MatrixXd::Identity(n, n), 0.0);
  return 0.5 * (sigma + sigma.transpose()).eval();
}

std::vector<Eigen::MatrixXd> block_sigma(const MilDataset& dataset,
                                         double lambda, Neighborhood nb) {
  std::vector<Eigen::MatrixXd> blocks;
  blocks.reserve(dataset.bags.size());
  for (const Bag& bag : dataset.bags) {
    if (lambda == 0.0) {
      blocks.push_back(Eigen::MatrixXd::Identity(bag.size(), bag.size()));
      continue;
    }
    if (!bag.has_coords()) {
      throw InputError("block_sigma: bag '" + bag.id +
                       "' has no grid coordinates but lambda > 0");
    }
    blocks.push_back(coupled_covariance(build_coupling(bag, nb), lambda));
  }
  return blocks;
}

}  // namespace vgpmil
