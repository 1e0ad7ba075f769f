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

#ifndef VGPMIL_VI_HPP_
#define VGPMIL_VI_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vgpmil/bag.hpp"
#include "vgpmil/coupling.hpp"
#include "vgpmil/kernel.hpp"

namespace vgpmil {

// Variational posterior over the inducing values, q(u) = N(mu, sigma).
struct InducingPosterior {
  Eigen::VectorXd mu;
  Eigen::MatrixXd sigma;
};

// Variational posterior over the augmented variables: per-bag pre-truncation
// means mu^{m_b} and the post-truncation expectations E_q(m)[m_b].
struct AugmentedPosterior {
  std::vector<Eigen::VectorXd> pre_trunc_means;
  std::vector<Eigen::VectorXd> expectations;
  std::vector<std::string> z_floored_bags;
};

// Training options. The inducing and iteration defaults are the standard
// settings for this model family at full scale.
struct FitConfig {
  double lambda = 0.0;
  int inducing_count = 200;
  int iterations = 200;
  std::uint64_t seed = 0;
  Neighborhood neighborhood = Neighborhood::kFourConnected;
  std::optional<KernelConfig> kernel;  // defaults(D) when unset

  void validate() const;
};

struct FitDiagnostics {
  std::vector<double> delta_mu_u;  // inf-norm change of mu^u per iteration
  std::vector<double> delta_e_m;   // inf-norm change of E[m] per iteration
  std::vector<std::string> z_floored_bags;  // unique, sorted
};

// Everything prediction needs; no training data is retained.
struct TrainedModel {
  KernelConfig kernel;
  double lambda = 0.0;
  Neighborhood neighborhood = Neighborhood::kFourConnected;
  Eigen::MatrixXd inducing;  // M x D
  Eigen::VectorXd mu_u;      // M
  Eigen::MatrixXd sigma_u;   // M x M
  std::uint64_t seed = 0;
  FitDiagnostics diagnostics;

  Eigen::Index inducing_count() const { return inducing.rows(); }
  Eigen::Index feature_dim() const { return inducing.cols(); }
};

// Quantities that are fixed for the whole fit because the kernel, the
// inducing locations and the coupling blocks never change:
//   kzz_inv   = (K_ZZ + jitter I)^{-1}
//   ratios[b] = K_bZ K_ZZ^{-1}
//   sigma_u   = (K_ZZ^{-1} + sum_b R_b^T Sigma_b R_b)^{-1}
// The middle term of the posterior covariance is accumulated bag by bag, so
// the N x N block-diagonal Sigma never exists as a matrix.
struct GramCaches {
  Eigen::MatrixXd kzz;
  Eigen::MatrixXd kzz_inv;
  std::vector<Eigen::MatrixXd> sigma_blocks;      // Sigma_b per bag
  std::vector<Eigen::VectorXd> sigma_sqrt_diag;   // sqrt(diag(Sigma_b))
  std::vector<Eigen::MatrixXd> ratios;            // R_b, |b| x M
  Eigen::MatrixXd sigma_u;
};

GramCaches build_caches(const MilDataset& dataset,
                        std::vector<Eigen::MatrixXd> sigma_blocks,
                        const Eigen::MatrixXd& inducing,
                        const KernelConfig& kernel);

// q(u) update: sigma_u from the caches, mu^u = Sigma^u sum_b R_b^T E[m_b].
InducingPosterior update_qu(const GramCaches& caches,
                            const std::vector<Eigen::VectorXd>& e_m);

// q(m) update: mu^{m_b} = Sigma_b R_b mu^u, then per-instance truncated
// expectations (negative-orthant mean for negative bags, its complement for
// positive bags) on the diagonal factorization of each block.
AugmentedPosterior update_qm(const MilDataset& dataset,
                             const GramCaches& caches,
                             const InducingPosterior& qu);

// Full training loop: coupling blocks, k-means inducing initialization,
// standard-normal initialization of E[m], then `iterations` rounds of
// update_qu / update_qm. Deterministic given cfg.seed.
TrainedModel fit(const MilDataset& dataset, const FitConfig& cfg);

}  // namespace vgpmil

#endif  // VGPMIL_VI_HPP_
