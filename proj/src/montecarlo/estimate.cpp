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

#include "montecarlo/estimate.hpp"

#include "common/error.hpp"

#include <boost/math/distributions/normal.hpp>

#include <algorithm>
#include <cmath>

namespace secrecy::montecarlo {

std::string_view to_string(Provenance p)
{
    switch (p) {
    case Provenance::closed_form: return "closed-form";
    case Provenance::quadrature: return "quadrature";
    case Provenance::monte_carlo: return "monte-carlo";
    }
    return "?";
}

double normal_quantile(double ci_level)
{
    if (!(ci_level > 0.0 && ci_level < 1.0)) throw DomainError("ci_level must lie in (0, 1)");
    return boost::math::quantile(boost::math::normal(), 0.5 * (1.0 + ci_level));
}

MetricEstimate proportion_estimate(std::uint64_t successes, std::uint64_t n, double ci_level)
{
    if (n == 0) throw DomainError("no accepted realizations");
    const double z = normal_quantile(ci_level);
    const double nn = static_cast<double>(n);
    const double p = static_cast<double>(successes) / nn;
    MetricEstimate e;
    e.value = p;
    e.provenance = Provenance::monte_carlo;
    e.trials_used = n;
    const double wald = z * std::sqrt(p * (1.0 - p) / nn);
    if (p - 5.0 * wald > 0.0 && p + 5.0 * wald < 1.0) {
        e.half_width = wald;
        e.ci_low = p - wald;
        e.ci_high = p + wald;
        return e;
    }
    const double z2n = z * z / nn;
    const double centre = (p + 0.5 * z2n) / (1.0 + z2n);
    const double half = z / (1.0 + z2n) * std::sqrt(p * (1.0 - p) / nn + 0.25 * z2n / nn);
    e.ci_low = std::max(0.0, centre - half);
    e.ci_high = std::min(1.0, centre + half);
    e.half_width = 0.5 * (e.ci_high - e.ci_low);
    return e;
}

MetricEstimate mean_estimate(double mean, double m2, std::uint64_t n, double ci_level)
{
    if (n == 0) throw DomainError("no accepted realizations");
    const double nn = static_cast<double>(n);
    const double var = n > 1 ? std::max(0.0, m2 / (nn - 1.0)) : 0.0;
    MetricEstimate e;
    e.value = mean;
    e.half_width = normal_quantile(ci_level) * std::sqrt(var / nn);
    e.ci_low = mean - e.half_width;
    e.ci_high = mean + e.half_width;
    e.provenance = Provenance::monte_carlo;
    e.trials_used = n;
    return e;
}

} // namespace secrecy::montecarlo
