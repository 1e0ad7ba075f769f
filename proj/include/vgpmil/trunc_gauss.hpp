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

#ifndef VGPMIL_TRUNC_GAUSS_HPP_
#define VGPMIL_TRUNC_GAUSS_HPP_

#include <Eigen/Dense>
#include <cstdint>

namespace vgpmil {

// Mean of N(mu, sigma^2) truncated to (-infty, 0):
//   E = mu - sigma * phi(mu/sigma) / (1 - Phi(mu/sigma)).
// Always negative and always below mu. Evaluated through the erfcx-based
// hazard ratio, so it stays finite for |mu/sigma| well past 30.
double neg_trunc_mean(double mu, double sigma);

// Per-instance expectations of a factorized Gaussian with the all-negative
// orthant removed (a positive bag's posterior). Z is the removed-orthant
// complement mass 1 - prod_i Phi(-mu_i/sigma_i).
struct PositiveBagExpectations {
  Eigen::VectorXd expectations;
  double z = 0.0;
  bool z_floored = false;  // Z hit the 1e-300 floor; values are clamped
};

// Floor applied to Z so a positive bag whose instances all look strongly
// negative degrades gracefully instead of producing NaN.
inline constexpr double kZFloor = 1e-300;

PositiveBagExpectations positive_bag_expectations(const Eigen::VectorXd& mu,
                                                  const Eigen::VectorXd& sigma);

// Probability of the negative orthant (-infty, 0)^d under N(mean, cov).
struct OrthantProb {
  double prob = 0.0;
  double std_error = 0.0;
};

// Dimension 1 is exact (Phi). Higher dimensions use the Genz
// separation-of-variables transform integrated with a randomized
// rank-1 lattice: `budget` total points split over 8 independent shifts,
// whose spread yields the standard-error estimate. Deterministic per seed.
OrthantProb negative_orthant_prob(const Eigen::VectorXd& mean,
                                  const Eigen::MatrixXd& cov,
                                  std::int64_t budget = 1 << 17,
                                  std::uint64_t seed = 0);

// Plain rejection-sampling oracle over a truncation region. Deliberately
// naive: used by tests to cross-check the analytic paths above.
enum class TruncRegion { kNegativeOrthant, kComplement };

struct McTruncEstimate {
  double prob = 0.0;
  double prob_std_error = 0.0;
  Eigen::VectorXd expectation;      // conditional mean given the region
  Eigen::VectorXd exp_std_error;    // per-coordinate standard errors
  std::int64_t accepted = 0;
};

McTruncEstimate mc_trunc_oracle(const Eigen::VectorXd& mean,
                                const Eigen::MatrixXd& cov, TruncRegion region,
                                std::int64_t samples, std::uint64_t seed);

}  // namespace vgpmil

#endif  // VGPMIL_TRUNC_GAUSS_HPP_
