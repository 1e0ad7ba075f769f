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

#include "vgpmil/kernel.hpp"

#include <cmath>
#include <string>

#include "vgpmil/errors.hpp"

namespace vgpmil {

KernelConfig KernelConfig::defaults(Eigen::Index feature_dim) {
  KernelConfig cfg;
  cfg.variance = 1.0;
  cfg.lengthscale = std::sqrt(static_cast<double>(feature_dim));
  cfg.jitter = 1e-6 * cfg.variance;
  return cfg;
}

void KernelConfig::validate() const {
  if (!(variance > 0.0)) {
    throw InputError("kernel: variance must be positive");
  }
  if (!(lengthscale > 0.0)) {
    throw InputError("kernel: lengthscale must be positive");
  }
  if (!(jitter > 0.0)) {
    throw InputError("kernel: jitter must be positive");
  }
}

double se_kernel(const Eigen::VectorXd& x, const Eigen::VectorXd& y,
                 const KernelConfig& cfg) {
  if (x.size() != y.size()) {
    throw InputError("se_kernel: dimension mismatch (" +
                     std::to_string(x.size()) + " vs " +
                     std::to_string(y.size()) + ")");
  }
  const double d2 = (x - y).squaredNorm();
  return cfg.variance *
         std::exp(-d2 / (2.0 * cfg.lengthscale * cfg.lengthscale));
}

namespace {

// |a - b|^2 = |a|^2 + |b|^2 - 2 a.b, assembled with one GEMM. Rounding can
// produce slightly negative squared distances; clamp before exp.
Eigen::MatrixXd cross_gram(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                           const KernelConfig& cfg) {
  const Eigen::VectorXd a2 = A.rowwise().squaredNorm();
  const Eigen::VectorXd b2 = B.rowwise().squaredNorm();
  Eigen::MatrixXd d2 = (-2.0 * A * B.transpose()).rowwise() + b2.transpose();
  d2.colwise() += a2;
  const double scale = -1.0 / (2.0 * cfg.lengthscale * cfg.lengthscale);
  return cfg.variance *
         (d2.cwiseMax(0.0) * scale).array().exp().matrix();
}

}  // namespace

Eigen::MatrixXd gram(const Eigen::MatrixXd& A, const Eigen::MatrixXd& B,
                     const KernelConfig& cfg) {
  if (A.cols() != B.cols()) {
    throw InputError("gram: feature dimension mismatch (" +
                     std::to_string(A.cols()) + " vs " +
                     std::to_string(B.cols()) + ")");
  }
  if (A.data() == B.data() && A.rows() == B.rows()) {
    return gram_symmetric(A, cfg);
  }
  return cross_gram(A, B, cfg);
}

Eigen::MatrixXd gram_symmetric(const Eigen::MatrixXd& A,
                               const KernelConfig& cfg) {
  Eigen::MatrixXd K = cross_gram(A, A, cfg);
  // Enforce exact symmetry and the exact zero-distance value on the diagonal.
  K = 0.5 * (K + K.transpose()).eval();
  K.diagonal().setConstant(cfg.variance);
  return K;
}

}  // namespace vgpmil
