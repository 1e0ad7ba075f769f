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

#include "vgpmil/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <string>

#include "vgpmil/errors.hpp"

namespace vgpmil {

Eigen::MatrixXd psd_solve(const Eigen::MatrixXd& M, const Eigen::MatrixXd& B,
                          double jitter) {
  if (M.rows() != M.cols()) {
    throw InputError("psd_solve: matrix is not square");
  }
  if (M.rows() != B.rows()) {
    throw InputError("psd_solve: rhs row count mismatch");
  }
  const Eigen::Index n = M.rows();
  double j = jitter;
  for (int attempt = 0; attempt <= 3; ++attempt) {
    Eigen::MatrixXd A = M;
    A.diagonal().array() += j;
    Eigen::LLT<Eigen::MatrixXd> llt(A);
    if (llt.info() == Eigen::Success) {
      return llt.solve(B);
    }
    if (j == 0.0) {
      j = 1e-12 * M.diagonal().cwiseAbs().maxCoeff();
      if (j == 0.0) j = 1e-12;
    } else {
      j *= 10.0;
    }
  }
  throw NumericalError(
      "psd_solve: Cholesky failed on " + std::to_string(n) + "x" +
      std::to_string(n) + " matrix after jitter escalation (final jitter " +
      std::to_string(j) + ")");
}

Eigen::MatrixXd psd_inverse(const Eigen::MatrixXd& M, double jitter) {
  Eigen::MatrixXd inv =
      psd_solve(M, Eigen::MatrixXd::Identity(M.rows(), M.rows()), jitter);
  return 0.5 * (inv + inv.transpose()).eval();
}

Eigen::MatrixXd cholesky_lower(const Eigen::MatrixXd& M) {
  Eigen::LLT<Eigen::MatrixXd> llt(M);
  if (llt.info() != Eigen::Success) {
    throw NumericalError("cholesky_lower: matrix is not positive definite");
  }
  return llt.matrixL();
}

Eigen::MatrixXd floor_spd(const Eigen::MatrixXd& S, double floor) {
  Eigen::MatrixXd sym = 0.5 * (S + S.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(sym);
  if (eig.info() != Eigen::Success) {
    throw NumericalError("floor_spd: eigendecomposition failed");
  }
  if (eig.eigenvalues().minCoeff() >= floor) {
    return sym;
  }
  Eigen::VectorXd vals = eig.eigenvalues().cwiseMax(floor);
  Eigen::MatrixXd out = eig.eigenvectors() * vals.asDiagonal() *
                        eig.eigenvectors().transpose();
  return 0.5 * (out + out.transpose()).eval();
}

}  // namespace vgpmil
