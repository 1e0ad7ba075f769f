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

#ifndef VGPMIL_NORMAL_HPP_
#define VGPMIL_NORMAL_HPP_

namespace vgpmil {

// Standard normal density.
double norm_pdf(double x);

// Standard normal CDF, computed through erfc so the lower tail keeps full
// relative accuracy down to the underflow threshold (x ~ -37.5).
double norm_cdf(double x);

// log of the standard normal CDF. Uses log(norm_cdf) while erfc is
// representable and switches to the asymptotic tail expansion below
// x = -36 where it is not.
double norm_logcdf(double x);

// Scaled complementary error function exp(x^2) erfc(x) for x >= 0.
// exp*erfc for moderate x, Laplace continued fraction for large x.
double erfcx_positive(double x);

// Inverse standard normal CDF (Wichura's AS 241 rational approximation,
// accurate to ~1e-16 relative over (0,1)).
double inverse_norm_cdf(double u);

// Hazard ratio phi(z) / (1 - Phi(z)) = phi(z) / Phi(-z), a.k.a. the inverse
// Mills ratio. Direct evaluation for z <= 5; for larger z it is rewritten
// through erfcx so numerator and denominator never underflow separately.
// Finite for |z| well past 30.
double mills_hazard(double z);

}  // namespace vgpmil

#endif  // VGPMIL_NORMAL_HPP_
