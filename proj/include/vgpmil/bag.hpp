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

#ifndef VGPMIL_BAG_HPP_
#define VGPMIL_BAG_HPP_

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

namespace vgpmil {

// Integer patch position inside a bag's grid.
struct GridCoord {
  int row = 0;
  int col = 0;

  friend bool operator==(const GridCoord&, const GridCoord&) = default;
};

// One bag of instances: the unit of supervision. Feature rows are instances;
// grid coordinates, when present, give each instance's patch position and
// must be unique within the bag.
struct Bag {
  std::string id;
  int label = 0;                  // bag label y_b in {0,1}
  Eigen::MatrixXd features;       // |b| x D
  std::vector<GridCoord> coords;  // empty, or one per instance
  std::vector<std::string> instance_ids;          // empty, or one per instance
  std::optional<std::vector<int>> instance_labels;  // ground truth, eval only

  Eigen::Index size() const { return features.rows(); }
  bool has_coords() const { return !coords.empty(); }
};

// A full dataset. Bags are kept in canonical order (sorted by bag id) so
// that every seeded computation downstream is independent of file row order.
struct MilDataset {
  std::vector<Bag> bags;
  Eigen::Index feature_dim = 0;

  Eigen::Index instance_count() const;
  bool all_have_coords() const;
  bool all_have_instance_labels() const;
};

// Checks structural invariants: non-empty bags, consistent dimensions,
// unique bag ids, unique coordinates inside each bag, labels in {0,1}, and
// bag label == max instance label wherever instance labels are complete.
// Throws InputError naming the offending bag.
void validate_dataset(const MilDataset& dataset);

// Sorts bags by id in place (instance order inside a bag is preserved).
void canonicalize(MilDataset& dataset);

}  // namespace vgpmil

#endif  // VGPMIL_BAG_HPP_
