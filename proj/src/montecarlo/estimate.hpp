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

#include <cstdint>
#include <string_view>

namespace secrecy::montecarlo {

enum class Provenance { closed_form, quadrature, monte_carlo };

std::string_view to_string(Provenance p);

struct MetricEstimate {
    double value = 0.0;
    /// Half the width of [ci_low, ci_high]; zero for deterministic routes.
    double half_width = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    Provenance provenance = Provenance::closed_form;
    std::uint64_t trials_used = 0;
    /// Realizations discarded for having too few points.
    std::uint64_t rejected = 0;

    bool covers(double x) const noexcept { return x >= ci_low && x <= ci_high; }

    static MetricEstimate exact(double v, Provenance p)
    {
        MetricEstimate e;
        e.value = e.ci_low = e.ci_high = v;
        e.provenance = p;
        return e;
    }
};

/// Two-sided normal quantile for a central coverage level (0.997 -> 2.97).
double normal_quantile(double ci_level);

/// Binomial proportion: Wald interval, switching to Wilson when the estimate
/// lies within five half-widths of 0 or 1.
MetricEstimate proportion_estimate(std::uint64_t successes, std::uint64_t n, double ci_level);

/// Sample mean with a normal-approximation interval; m2 is the sum of
/// squared deviations from the mean.
MetricEstimate mean_estimate(double mean, double m2, std::uint64_t n, double ci_level);

} // namespace secrecy::montecarlo
