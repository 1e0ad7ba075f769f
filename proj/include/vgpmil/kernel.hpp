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

#ifndef VGPMIL_KERNEL_HPP_
#define VGPMIL_KERNEL_HPP_

#include <Eigen/Dense>

namespace vgpmil {

// Squared-exponential kernel hyperparameters. Fixed throughout training:
// variance 1 and lengthscale sqrt(D) are the standard defaults for this
// model family.
struct KernelConfig {
  double variance = 1.0;     // gamma
  double lengthscale = 1.0;  // ell, in feature-space units
  double jitter = 1e-6;      // added to diagonals before factorization

  // gamma = 1, ell = sqrt(D), jitter = 1e-6 * gamma.
  static KernelConfig defaults(Eigen::Index feature_dim);

  void validate() const;  // throws InputError on non-positive fields
};

// k(x, y) = gamma * exp(-|x - y|^2 / (2 ell^2)). Symmetric in x, y.
double se_kernel(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                 const KernelConfig& cfg);

// Cross Gram matrix: entry (i,j) = k(A.row(i), B.row(j)). When A and B alias
// the same storage the result is exactly symmetric with gamma on the
// diagonal.
Eigen::MatrixXd gram(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                     const KernelConfig& cfg);

// Symmetric Gram of one point set; same as gram(A, A) but does not rely on
// aliasing detection.
Eigen::MatrixXd gram_symmetric(const Eigen::MatrixXd& A,
                               const KernelConfig& cfg);

}  // namespace vgpmil

#endif  // VGPMIL_KERNEL_HPP_
