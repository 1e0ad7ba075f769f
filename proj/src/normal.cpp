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

#include "vgpmil/normal.hpp"

#include <cmath>
#include <limits>

namespace vgpmil {

namespace {
constexpr double kInvSqrt2 = 0.7071067811865476;
constexpr double kInvSqrt2Pi = 0.3989422804014327;
constexpr double kLogSqrt2Pi = 0.9189385332046727;
constexpr double kSqrt2OverPi = 0.7978845608028654;
constexpr double kSqrtPi = 1.7724538509055160;
}  // namespace

double norm_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double norm_cdf(double x) { return 0.5 * std::erfc(-x * kInvSqrt2); }

double norm_logcdf(double x) {
  if (x > -36.0) {
    // erfc(-x/sqrt(2)) stays normal here; the direct log is accurate.
    return std::log(norm_cdf(x));
  }
  // Asymptotic expansion of the lower tail:
  //   log Phi(x) = -x^2/2 - log(-x) - log sqrt(2 pi) + log(1 - 1/x^2 + 3/x^4)
  const double r2 = 1.0 / (x * x);
  return -0.5 * x * x - std::log(-x) - kLogSqrt2Pi +
         std::log1p(-r2 * (1.0 - 3.0 * r2));
}

double erfcx_positive(double x) {
  if (x < 4.0) {
    return std::exp(x * x) * std::erfc(x);
  }
  // Laplace continued fraction:
  //   sqrt(pi) e^{x^2} erfc(x) = 1/(x + (1/2)/(x + (2/2)/(x + (3/2)/(...))))
  // Converges to machine precision for x >= 4 well before 40 levels.
  double t = x;
  for (int k = 40; k >= 1; --k) {
    t = x + 0.5 * static_cast<double>(k) / t;
  }
  return 1.0 / (kSqrtPi * t);
}

double mills_hazard(double z) {
  if (z <= 5.0) {
    return norm_pdf(z) / (0.5 * std::erfc(z * kInvSqrt2));
  }
  return kSqrt2OverPi / erfcx_positive(z * kInvSqrt2);
}

double inverse_norm_cdf(double u) {
  // AS 241 (Wichura 1988), the PPND16 variant.
  if (u <= 0.0) return -std::numeric_limits<double>::infinity();
  if (u >= 1.0) return std::numeric_limits<double>::infinity();

  const double q = u - 0.5;
  if (std::fabs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q *
           (((((((2.5090809287301226727e+3 * r + 3.3430575583588128105e+4) *
                     r +
                 6.7265770927008700853e+4) *
                    r +
                4.5921953931549871457e+4) *
                   r +
               1.3731693765509461125e+4) *
                  r +
              1.9715909503065514427e+3) *
                 r +
             1.3314166789178437745e+2) *
                r +
            3.3871328727963666080e+0) /
           (((((((5.2264952788528545610e+3 * r + 2.8729085735721942674e+4) *
                     r +
                 3.9307895800092710610e+4) *
                    r +
                2.1213794301586595867e+4) *
                   r +
               5.3941960214247511077e+3) *
                  r +
              6.8718700749205790830e+2) *
                 r +
             4.2313330701600911252e+1) *
                r +
            1.0);
  }

  double r = (q < 0.0) ? u : 1.0 - u;
  r = std::sqrt(-std::log(r));
  double val;
  if (r <= 5.0) {
    r -= 1.6;
    val = (((((((7.74545014278341407640e-4 * r + 2.27238449892691845833e-2) *
                    r +
                2.41780725177450611770e-1) *
                   r +
               1.27045825245236838258e+0) *
                  r +
              3.64784832476320460504e+0) *
                 r +
             5.76949722146069140550e+0) *
                r +
            4.63033784615654529590e+0) *
               r +
           1.42343711074968357734e+0) /
          (((((((1.05075007164441684324e-9 * r + 5.47593808499534494600e-4) *
                    r +
                1.51986665636164571966e-2) *
                   r +
               1.48103976427480074590e-1) *
                  r +
              6.89767334985100004550e-1) *
                 r +
             1.67638483018380384940e+0) *
                r +
            2.05319162663775882187e+0) *
               r +
           1.0);
  } else {
    r -= 5.0;
    val = (((((((2.01033439929228813265e-7 * r + 2.71155556874348757815e-5) *
                    r +
                1.24266094738807843860e-3) *
                   r +
               2.65321895265761230930e-2) *
                  r +
              2.96560571828504891230e-1) *
                 r +
             1.78482653991729133580e+0) *
                r +
            5.46378491116411436990e+0) *
               r +
           6.65790464350110377720e+0) /
          (((((((2.04426310338993978564e-15 * r + 1.42151175831644588870e-7) *
                    r +
                1.84631831751005468180e-5) *
                   r +
               7.86869131145613259100e-4) *
                  r +
              1.48753612908506148525e-2) *
                 r +
             1.36929880922735805310e-1) *
                r +
            5.99832206555887937690e-1) *
               r +
           1.0);
  }
  return (q < 0.0) ? -val : val;
}

}  // namespace vgpmil
