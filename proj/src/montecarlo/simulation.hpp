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

#include "metrics/scenario.hpp"
#include "montecarlo/estimate.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace secrecy::montecarlo {

struct MonteCarloConfig {
    std::uint64_t trials = 1000000;
    std::uint64_t master_seed = 1;
    /// Simulation window radius; 0 selects it automatically per side.
    double window_radius = 0.0;
    int worker_hint = 1;
    double ci_level = 0.997;
    /// Realizations per scheduling unit. Part of the stream layout only
    /// through the reduction order, so it is fixed rather than tuned.
    std::uint64_t batch_size = 4096;
};

struct KMetrics {
    MetricEstimate cop_nearest, cop_best;
    /// Indexed by metrics::Case.
    std::array<MetricEstimate, 4> pnz;
    MetricEstimate capacity_nearest, capacity_best;
    /// [E(C_M) - E(C_W)]^+ (compared with the closed forms).
    std::array<MetricEstimate, 4> secrecy_clipped_difference;
    /// E([C_M - C_W]^+).
    std::array<MetricEstimate, 4> secrecy_mean_of_clipped;
};

struct SimulationResult {
    std::uint64_t trials = 0;
    std::uint64_t rejected = 0;
    double window_b = 0.0, window_e = 0.0;
    MetricEstimate wiretap_nearest, wiretap_best;
    /// per_k[k - 1]
    std::vector<KMetrics> per_k;

    const KMetrics& at(int k) const { return per_k.at(static_cast<std::size_t>(k - 1)); }
    double rejection_rate() const noexcept
    {
        return trials ? static_cast<double>(rejected) / static_cast<double>(trials) : 0.0;
    }
};

/// Window radius for one side such that fewer than k_max points occur with
/// probability < 1e-9 and the expected number of points outside that could
/// enter the k_max strongest is < 1e-6.
double auto_window_radius(const metrics::ScenarioConfig& cfg, stochgeo::Side side, int k_max);

/// One pass over `mc.trials` network realizations producing every metric
/// for users 1..k_max. Deterministic in (master_seed, trials, batch_size)
/// regardless of worker count.
SimulationResult simulate(const metrics::ScenarioConfig& cfg, const MonteCarloConfig& mc, int k_max);

/// Single-metric views at cfg.k().
MetricEstimate simulate_cop(const metrics::ScenarioConfig& cfg, const MonteCarloConfig& mc);
MetricEstimate simulate_pnz(const metrics::ScenarioConfig& cfg, metrics::Case c, const MonteCarloConfig& mc);

struct ErgodicSecrecyEstimates {
    MetricEstimate clipped_difference;
    MetricEstimate mean_of_clipped;
};
ErgodicSecrecyEstimates simulate_ergodic_secrecy(const metrics::ScenarioConfig& cfg, metrics::Case c,
                                                 const MonteCarloConfig& mc);

} // namespace secrecy::montecarlo
