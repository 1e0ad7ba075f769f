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

#ifndef VGPMIL_LINALG_HPP_
#define VGPMIL_LINALG_HPP_

#include <Eigen/Dense>

namespace vgpmil {

// Solves (M + jitter*I) X = B for symmetric positive (semi)definite M via
// Cholesky. If the factorization fails the jitter is escalated by x10 up to
// three times; after that a NumericalError reports the final jitter tried.
// jitter = 0 is allowed for matrices that are SPD by construction; on
// failure escalation then starts from 1e-12 * max diagonal.
Eigen::MatrixXd psd_solve(const Eigen::MatrixXd& M, const Eigen::MatrixXd& B,
                          double jitter);

// Symmetrized inverse of (M + jitter*I); psd_solve against the identity.
Eigen::MatrixXd psd_inverse(const Eigen::MatrixXd& M, double jitter);

// Lower Cholesky factor of M (no jitter added); NumericalError on failure.
Eigen::MatrixXd cholesky_lower(const Eigen::MatrixXd& M);

// Symmetrizes S and, if its smallest eigenvalue falls below floor, clamps
// the spectrum at floor. Returns S unchanged (beyond symmetrization) when
// already well conditioned.
Eigen::MatrixXd floor_spd(const Eigen::MatrixXd& S, double floor);

}  // namespace vgpmil

#endif  // VGPMIL_LINALG_HPP_
