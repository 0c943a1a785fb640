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

#include "cli/run_spec.hpp"
#include "cli/table.hpp"
#include "metrics/scenario.hpp"
#include "montecarlo/simulation.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace secrecy::cli {

/// ScenarioConfig construction with invariant violations reported as
/// ConfigError.
metrics::ScenarioConfig make_scenario(const metrics::ScenarioInputs& in);

/// The case or ordering label a metric row carries.
std::string row_label(const metrics::ScenarioConfig& cfg, OutputMetric m, std::optional<metrics::Case> which);

/// Closed-form value at cfg.k().
double closed_form_value(const metrics::ScenarioConfig& cfg, OutputMetric m, std::optional<metrics::Case> which,
                         std::optional<double> tau);

/// Quadrature oracle at cfg.k().
montecarlo::MetricEstimate quadrature_estimate(const metrics::ScenarioConfig& cfg, OutputMetric m,
                                               std::optional<metrics::Case> which);

/// Rows for user k drawn from a joint simulation pass; ergodic secrecy adds
/// a second row for the mean-of-clipped estimator.
std::vector<Row> simulation_rows(const metrics::ScenarioConfig& cfg, const montecarlo::SimulationResult& sim,
                                 OutputMetric m, std::optional<metrics::Case> which, int k);

/// Rows for one metric at cfg.k() by one method.
std::vector<Row> evaluate(const metrics::ScenarioConfig& cfg, OutputMetric m, std::optional<metrics::Case> which,
                          Method method, std::optional<double> tau, const montecarlo::MonteCarloConfig& mc);

nlohmann::ordered_json scenario_json(const metrics::ScenarioConfig& cfg);
nlohmann::ordered_json mc_json(const montecarlo::MonteCarloConfig& mc);

} // namespace secrecy::cli
