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

#include "vgpmil/bag.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "vgpmil/errors.hpp"

namespace vgpmil {

Eigen::Index MilDataset::instance_count() const {
  Eigen::Index n = 0;
  for (const Bag& b : bags) n += b.size();
  return n;
}

bool MilDataset::all_have_coords() const {
  return std::all_of(bags.begin(), bags.end(),
                     [](const Bag& b) { return b.has_coords(); });
}

bool MilDataset::all_have_instance_labels() const {
  return std::all_of(bags.begin(), bags.end(), [](const Bag& b) {
    return b.instance_labels.has_value() &&
           static_cast<Eigen::Index>(b.instance_labels->size()) == b.size();
  });
}

void validate_dataset(const MilDataset& dataset) {
  if (dataset.bags.empty()) {
    throw InputError("dataset: no bags");
  }
  std::set<std::string> seen_ids;
  for (const Bag& bag : dataset.bags) {
    if (!seen_ids.insert(bag.id).second) {
      throw InputError("dataset: duplicate bag id '" + bag.id + "'");
    }
    if (bag.size() < 1) {
      throw InputError("bag '" + bag.id + "': no instances");
    }
    if (bag.features.cols() != dataset.feature_dim) {
      throw InputError("bag '" + bag.id + "': feature dimension " +
                       std::to_string(bag.features.cols()) +
                       " != dataset dimension " +
                       std::to_string(dataset.feature_dim));
    }
    if (bag.label != 0 && bag.label != 1) {
      throw InputError("bag '" + bag.id + "': bag label must be 0 or 1");
    }
    if (bag.has_coords()) {
      if (static_cast<Eigen::Index>(bag.coords.size()) != bag.size()) {
        throw InputError("bag '" + bag.id +
                         "': coordinate count does not match instance count");
      }
      std::set<std::pair<int, int>> cells;
      for (const GridCoord& c : bag.coords) {
        if (!cells.insert({c.row, c.col}).second) {
          throw InputError("bag '" + bag.id + "': duplicate grid cell (" +
                           std::to_string(c.row) + "," + std::to_string(c.col) +
                           ")");
        }
      }
    }
    if (bag.instance_labels.has_value() &&
        static_cast<Eigen::Index>(bag.instance_labels->size()) == bag.size()) {
      int max_label = 0;
      for (int h : *bag.instance_labels) {
        if (h != 0 && h != 1) {
          throw InputError("bag '" + bag.id +
                           "': instance labels must be 0 or 1");
        }
        max_label = std::max(max_label, h);
      }
      if (max_label != bag.label) {
        throw InputError("bag '" + bag.id +
                         "': bag label is not the max of its instance labels");
      }
    }
  }
}

void canonicalize(MilDataset& dataset) {
  std::sort(dataset.bags.begin(), dataset.bags.end(),
            [](const Bag& a, const Bag& b) { return a.id < b.id; });
}

}  // namespace vgpmil
