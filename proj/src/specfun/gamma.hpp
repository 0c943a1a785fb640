/*
   Copyright 2026 The secrecy-mimo Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <complex>

namespace secrecy::specfun {

using cplx = std::complex<double>;

/// Principal branch of log Gamma(z), analytic on the plane cut along the
/// non-positive real axis. Throws PoleError at z = 0, -1, -2, ...
///
/// Re(z) >= 0.5 uses a 15-term Lanczos sum (g = 607/128); the left half
/// plane is reached by the upward recurrence, which keeps the branch
/// principal without the overflow that sin(pi z) suffers for large Im(z).
cplx log_gamma(cplx z);

/// Real log|Gamma(x)| for x > 0 (thin wrapper, kept for symmetry with the
/// complex routine).
double log_gamma(double x);

/// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a).
double gamma_q(double a, double x);

/// Unregularized lower incomplete gamma: integral of t^(a-1) e^-t over [0, x].
double lower_incomplete_gamma(double a, double x);

/// Unregularized upper incomplete gamma: integral of t^(a-1) e^-t over [x, inf).
double upper_incomplete_gamma(double a, double x);

/// Inverse of Q(a, .) : returns x with gamma_q(a, x) == q, for 0 < q < 1.
double gamma_q_inverse(double a, double q);

} // namespace secrecy::specfun
