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

#include <optional>
#include <string_view>

namespace secrecy::montecarlo {

enum class Metric { cop, pnz, capacity, wiretap_capacity, ergodic_secrecy };

std::string_view to_string(Metric m);
/// Throws DomainError for unknown names.
Metric parse_metric(std::string_view s);

/// Direct quadrature of a metric's defining integral, built from the
/// distribution-level laws (fading, distance, order statistics) rather than
/// the proposition-level closed forms. COP and capacities follow
/// cfg.ordering(), wiretap capacity cfg.eavesdropper_policy(); PNZ and
/// ergodic secrecy take `which` (default: the cfg's pairing). Throws
/// ConvergenceError, with the achieved residual, if the 1e-7 relative
/// tolerance is not reached.
MetricEstimate integrate_defining(Metric metric, const metrics::ScenarioConfig& cfg,
                                  std::optional<metrics::Case> which = std::nullopt);

} // namespace secrecy::montecarlo
