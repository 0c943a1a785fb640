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

#include "montecarlo/random_stream.hpp"

#include <array>
#include <string>

namespace secrecy::fading {

/// alpha-mu power-gain law: (g / omega)^(alpha/2) is standard-gamma(mu).
class AlphaMuParams {
public:
    /// Throws DomainError unless all three are positive and finite.
    AlphaMuParams(double alpha, double mu, double omega);

    /// Unit-mean link: omega = Gamma(mu) / Gamma(mu + 2/alpha).
    static AlphaMuParams canonical(double alpha, double mu);

    double alpha() const noexcept { return alpha_; }
    double mu() const noexcept { return mu_; }
    double omega() const noexcept { return omega_; }
    /// 1 / (omega Gamma(mu))
    double epsilon() const noexcept { return epsilon_; }
    /// 1 / omega
    double theta() const noexcept { return theta_; }

    bool operator==(const AlphaMuParams&) const = default;

private:
    double alpha_, mu_, omega_;
    double epsilon_, theta_;
};

double pdf_power_gain(const AlphaMuParams& p, double x);
double cdf_power_gain(const AlphaMuParams& p, double x);
/// 1 - cdf, computed without cancellation.
double ccdf_power_gain(const AlphaMuParams& p, double x);

/// E[g^order] = omega^order Gamma(mu + 2 order/alpha) / Gamma(mu); finite
/// for order > -alpha mu / 2.
double moment_power_gain(const AlphaMuParams& p, double order);

/// Draws g = omega G^(2/alpha) with G ~ Gamma(mu, 1).
double sample_power_gain(const AlphaMuParams& p, montecarlo::RandomStream& rng);

/// Sum of `count` independent draws (the exact MIMO branch sum).
double sample_power_gain_sum(const AlphaMuParams& link, int count, montecarlo::RandomStream& rng);

struct SumFit {
    AlphaMuParams params;
    /// Relative residuals of the first three moments at the solution.
    std::array<double, 3> moment_residuals;
    int iterations;
    bool used_fallback;
};

/// Exact first three moments of the sum of `count` i.i.d. link gains.
std::array<double, 3> sum_moments(const AlphaMuParams& link, int count);

/// alpha-mu law matching the first three moments of the sum of `count`
/// i.i.d. link gains. count == 1 returns `link` unchanged. Throws
/// DomainError for count < 1, ConvergenceError when no solution is found
/// inside alpha in [0.2, 20], mu in [0.1, 50].
SumFit fit_sum(const AlphaMuParams& link, int count);

inline AlphaMuParams fit_sum_params(const AlphaMuParams& link, int count)
{
    return fit_sum(link, count).params;
}

std::string to_string(const AlphaMuParams& p);

} // namespace secrecy::fading
