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

#include "vgpmil/trunc_gauss.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "vgpmil/errors.hpp"
#include "vgpmil/linalg.hpp"
#include "vgpmil/normal.hpp"
#include "vgpmil/rng.hpp"

namespace vgpmil {

double neg_trunc_mean(double mu, double sigma) {
  if (!(sigma > 0.0)) {
    throw InputError("neg_trunc_mean: sigma must be positive");
  }
  const double z = mu / sigma;
  return mu - sigma * mills_hazard(z);
}

PositiveBagExpectations positive_bag_expectations(
    const Eigen::VectorXd& mu, const Eigen::VectorXd& sigma) {
  const Eigen::Index n = mu.size();
  if (n < 1) {
    throw InputError("positive_bag_expectations: empty bag");
  }
  if (sigma.size() != n) {
    throw InputError("positive_bag_expectations: mu/sigma length mismatch");
  }
  if (!(sigma.minCoeff() > 0.0)) {
    throw InputError("positive_bag_expectations: sigma must be positive");
  }

  // Z = 1 - prod_i Phi(-z_i), accumulated in log space so a bag of strongly
  // negative means still produces a meaningful (tiny) Z.
  double log_all_negative = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    log_all_negative += norm_logcdf(-mu[i] / sigma[i]);
  }
  double z_mass = -std::expm1(log_all_negative);

  PositiveBagExpectations out;
  out.z = z_mass;
  if (!(z_mass >= kZFloor)) {
    z_mass = kZFloor;
    out.z = kZFloor;
    out.z_floored = true;
  }

  // E[m_i | complement] = mu_i + (1-Z)/Z * (mu_i - E_i), with E_i the
  // (-infty,0)-truncated mean. This form makes the total-expectation
  // identity Z*E[..|comp] + (1-Z)*E_i = mu_i hold to rounding error, and
  // avoids cancellation when Z is small (mu_i - E_i = sigma_i * hazard >= 0).
  out.expectations.resize(n);
  const double ratio = (1.0 - z_mass) / z_mass;
  for (Eigen::Index i = 0; i < n; ++i) {
    const double gap = sigma[i] * mills_hazard(mu[i] / sigma[i]);
    out.expectations[i] = mu[i] + ratio * gap;
  }
  return out;
}

namespace {

// Fractional parts of square roots of primes, the usual generators for a
// Richtmyer (Kronecker) lattice.
std::vector<double> lattice_generators(int dim) {
  static constexpr int kPrimes[] = {
      2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,
      43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101,
      103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167,
      173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229};
  std::vector<double> q(dim);
  for (int j = 0; j < dim; ++j) {
    if (j < static_cast<int>(std::size(kPrimes))) {
      double s = std::sqrt(static_cast<double>(kPrimes[j]));
      q[j] = s - std::floor(s);
    } else {
      // Beyond the table, fall back to the golden-ratio ladder.
      q[j] = std::fmod(0.6180339887498949 * (j + 1), 1.0);
    }
  }
  return q;
}

// One pass of the Genz sequential transform for P(X < 0), X ~ N(mean, cov),
// L the lower Cholesky factor, w a point in [0,1)^{d-1}.
double genz_point(const Eigen::VectorXd& mean, const Eigen::MatrixXd& L,
                  const double* w, Eigen::VectorXd& y) {
  const Eigen::Index d = mean.size();
  double e = norm_cdf(-mean[0] / L(0, 0));
  double f = e;
  for (Eigen::Index i = 1; i < d; ++i) {
    if (f <= 0.0) return 0.0;
    const double u = std::clamp(w[i - 1] * e, 1e-300, 1.0 - 1e-16);
    y[i - 1] = inverse_norm_cdf(u);
    double dot = 0.0;
    for (Eigen::Index j = 0; j < i; ++j) dot += L(i, j) * y[j];
    e = norm_cdf(-(mean[i] + dot) / L(i, i));
    f *= e;
  }
  return f;
}

}  // namespace

OrthantProb negative_orthant_prob(const Eigen::VectorXd& mean,
                                  const Eigen::MatrixXd& cov,
                                  std::int64_t budget, std::uint64_t seed) {
  const Eigen::Index d = mean.size();
  if (d < 1) {
    throw InputError("negative_orthant_prob: dimension must be >= 1");
  }
  if (cov.rows() != d || cov.cols() != d) {
    throw InputError("negative_orthant_prob: covariance shape mismatch");
  }
  if (d == 1) {
    return {norm_cdf(-mean[0] / std::sqrt(cov(0, 0))), 0.0};
  }

  // Genz's ordering heuristic: integrate the most constrained coordinates
  // first. Sort by the marginal upper bound (0 - mean_i)/sd_i.
  std::vector<Eigen::Index> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) {
                     return -mean[a] / std::sqrt(cov(a, a)) <
                            -mean[b] / std::sqrt(cov(b, b));
                   });
  Eigen::VectorXd pm(d);
  Eigen::MatrixXd pc(d, d);
  for (Eigen::Index i = 0; i < d; ++i) {
    pm[i] = mean[order[i]];
    for (Eigen::Index j = 0; j < d; ++j) pc(i, j) = cov(order[i], order[j]);
  }

  Eigen::MatrixXd L;
  try {
    L = cholesky_lower(pc);
  } catch (const NumericalError&) {
    throw NumericalError(
        "negative_orthant_prob: covariance is not positive definite");
  }

  constexpr int kShifts = 8;
  const std::int64_t points =
      std::max<std::int64_t>(1, budget / kShifts);
  const std::vector<double> q = lattice_generators(static_cast<int>(d - 1));

  Rng rng(seed);
  Eigen::VectorXd y(d - 1);
  std::vector<double> w(d - 1);
  double shift_means[kShifts];
  for (int s = 0; s < kShifts; ++s) {
    std::vector<double> delta(d - 1);
    for (auto& v : delta) v = rng.uniform();
    double acc = 0.0;
    for (std::int64_t k = 0; k < points; ++k) {
      for (Eigen::Index j = 0; j < d - 1; ++j) {
        double v = std::fmod(static_cast<double>(k + 1) * q[j] + delta[j], 1.0);
        // Baker (tent) transform keeps the lattice symmetric in [0,1).
        w[j] = 1.0 - std::fabs(2.0 * v - 1.0);
      }
      acc += genz_point(pm, L, w.data(), y);
    }
    shift_means[s] = acc / static_cast<double>(points);
  }

  double p = 0.0;
  for (double m : shift_means) p += m;
  p /= kShifts;
  double var = 0.0;
  for (double m : shift_means) var += (m - p) * (m - p);
  var /= (kShifts - 1);
  return {std::clamp(p, 0.0, 1.0), std::sqrt(var / kShifts)};
}

McTruncEstimate mc_trunc_oracle(const Eigen::VectorXd& mean,
                                const Eigen::MatrixXd& cov, TruncRegion region,
                                std::int64_t samples, std::uint64_t seed) {
  const Eigen::Index d = mean.size();
  if (samples < 10000) {
    throw InputError("mc_trunc_oracle: need at least 1e4 samples");
  }
  Eigen::MatrixXd L;
  try {
    L = cholesky_lower(cov);
  } catch (const NumericalError&) {
    throw NumericalError("mc_trunc_oracle: covariance is not positive definite");
  }

  Rng rng(seed);
  Eigen::VectorXd z(d), x(d);
  Eigen::VectorXd sum = Eigen::VectorXd::Zero(d);
  Eigen::VectorXd sumsq = Eigen::VectorXd::Zero(d);
  std::int64_t accepted = 0;
  for (std::int64_t k = 0; k < samples; ++k) {
    for (Eigen::Index i = 0; i < d; ++i) z[i] = rng.normal();
    x.noalias() = mean + L * z;
    const bool all_negative = (x.array() < 0.0).all();
    const bool in_region = (region == TruncRegion::kNegativeOrthant)
                               ? all_negative
                               : !all_negative;
    if (in_region) {
      ++accepted;
      sum += x;
      sumsq += x.cwiseProduct(x);
    }
  }

  const double n = static_cast<double>(samples);
  const double p = static_cast<double>(accepted) / n;
  if (p < 1e-6) {
    throw NumericalError(
        "mc_trunc_oracle: acceptance rate " + std::to_string(p) +
        " below 1e-6; choose an easier test point");
  }
  McTruncEstimate est;
  est.prob = p;
  est.prob_std_error = std::sqrt(p * (1.0 - p) / n);
  est.accepted = accepted;
  est.expectation = sum / static_cast<double>(accepted);
  est.exp_std_error.resize(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    const double var =
        sumsq[i] / static_cast<double>(accepted) -
        est.expectation[i] * est.expectation[i];
    est.exp_std_error[i] =
        std::sqrt(std::max(var, 0.0) / static_cast<double>(accepted));
  }
  return est;
}

}  // namespace vgpmil
