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

#ifndef VGPMIL_ERRORS_HPP_
#define VGPMIL_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace vgpmil {

// Invalid user input: malformed files, inconsistent labels, bad dimensions,
// out-of-range configuration. Maps to CLI exit code 1.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical failure: factorization did not succeed after jitter escalation,
// non-positive variances, infeasible Monte Carlo oracles. Maps to CLI exit
// code 2.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace vgpmil

#endif  // VGPMIL_ERRORS_HPP_
