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

#include "cli/evaluate.hpp"

#include "common/error.hpp"
#include "metrics/secrecy_metrics.hpp"
#include "montecarlo/quadrature_oracle.hpp"

namespace secrecy::cli {

using metrics::Case;
using metrics::Ordering;
using metrics::ScenarioConfig;
using montecarlo::MetricEstimate;
using montecarlo::Provenance;

namespace {

Case pairing(const ScenarioConfig& cfg, std::optional<Case> which)
{
    return which.value_or(metrics::case_of(cfg.ordering(), cfg.eavesdropper_policy()));
}

Row make_row(const ScenarioConfig& cfg, OutputMetric m, std::optional<Case> which, const MetricEstimate& e)
{
    return Row{std::string(to_string(m)), row_label(cfg, m, which), cfg.k(), e, {}};
}

nlohmann::ordered_json fading_json(const fading::AlphaMuParams& p)
{
    return {{"alpha", p.alpha()}, {"mu", p.mu()}, {"omega", p.omega()}};
}

} // namespace

ScenarioConfig make_scenario(const metrics::ScenarioInputs& in)
{
    try {
        return ScenarioConfig(in);
    } catch (const ConvergenceError&) {
        throw;
    } catch (const DomainError& e) {
        throw ConfigError(0, e.what());
    }
}

std::string row_label(const ScenarioConfig& cfg, OutputMetric m, std::optional<Case> which)
{
    switch (m) {
    case OutputMetric::cop:
    case OutputMetric::capacity: return std::string(metrics::to_string(cfg.ordering()));
    case OutputMetric::wiretap_capacity: return std::string(metrics::to_string(cfg.eavesdropper_policy()));
    case OutputMetric::pnz:
    case OutputMetric::ergodic_secrecy: return std::string(metrics::to_string(pairing(cfg, which)));
    case OutputMetric::kstar: return "best";
    }
    return "?";
}

double closed_form_value(const ScenarioConfig& cfg, OutputMetric m, std::optional<Case> which,
                         std::optional<double> tau)
{
    switch (m) {
    case OutputMetric::cop: return metrics::cop(cfg);
    case OutputMetric::pnz: return metrics::pnz(cfg, pairing(cfg, which));
    case OutputMetric::capacity:
        return cfg.ordering() == Ordering::nearest ? metrics::ergodic_capacity_nearest(cfg)
                                                   : metrics::ergodic_capacity_best(cfg);
    case OutputMetric::wiretap_capacity:
        return cfg.eavesdropper_policy() == Ordering::nearest ? metrics::wiretap_capacity_nearest(cfg)
                                                              : metrics::wiretap_capacity_best(cfg);
    case OutputMetric::ergodic_secrecy: return metrics::ergodic_secrecy_capacity(cfg, pairing(cfg, which));
    case OutputMetric::kstar:
        if (!tau) throw ConfigError(0, "metric kstar requires [scenario] tau");
        return metrics::max_secure_best_users(cfg, *tau);
    }
    return 0.0;
}

MetricEstimate quadrature_estimate(const ScenarioConfig& cfg, OutputMetric m, std::optional<Case> which)
{
    using montecarlo::Metric;
    switch (m) {
    case OutputMetric::cop: return montecarlo::integrate_defining(Metric::cop, cfg);
    case OutputMetric::pnz: return montecarlo::integrate_defining(Metric::pnz, cfg, pairing(cfg, which));
    case OutputMetric::capacity: return montecarlo::integrate_defining(Metric::capacity, cfg);
    case OutputMetric::wiretap_capacity: return montecarlo::integrate_defining(Metric::wiretap_capacity, cfg);
    case OutputMetric::ergodic_secrecy:
        return montecarlo::integrate_defining(Metric::ergodic_secrecy, cfg, pairing(cfg, which));
    case OutputMetric::kstar: break;
    }
    throw ConfigError(0, "metric kstar is only available in closed form");
}

std::vector<Row> simulation_rows(const ScenarioConfig& cfg, const montecarlo::SimulationResult& sim, OutputMetric m,
                                 std::optional<Case> which, int k)
{
    const auto& r = sim.at(k);
    const ScenarioConfig ck = cfg.with_k(k);
    const int c = static_cast<int>(pairing(cfg, which));
    const bool nearest = cfg.ordering() == Ordering::nearest;
    switch (m) {
    case OutputMetric::cop: return {make_row(ck, m, which, nearest ? r.cop_nearest : r.cop_best)};
    case OutputMetric::pnz: return {make_row(ck, m, which, r.pnz[c])};
    case OutputMetric::capacity: return {make_row(ck, m, which, nearest ? r.capacity_nearest : r.capacity_best)};
    case OutputMetric::wiretap_capacity:
        return {make_row(ck, m, which,
                         cfg.eavesdropper_policy() == Ordering::nearest ? sim.wiretap_nearest : sim.wiretap_best)};
    case OutputMetric::ergodic_secrecy: {
        auto extra = make_row(ck, m, which, r.secrecy_mean_of_clipped[c]);
        extra.metric = "ergodic_secrecy_mean_of_clipped";
        return {make_row(ck, m, which, r.secrecy_clipped_difference[c]), extra};
    }
    case OutputMetric::kstar: break;
    }
    throw ConfigError(0, "metric kstar is only available in closed form");
}

std::vector<Row> evaluate(const ScenarioConfig& cfg, OutputMetric m, std::optional<Case> which, Method method,
                          std::optional<double> tau, const montecarlo::MonteCarloConfig& mc)
{
    switch (method) {
    case Method::closed_form:
        return {make_row(cfg, m, which, MetricEstimate::exact(closed_form_value(cfg, m, which, tau), Provenance::closed_form))};
    case Method::quadrature: return {make_row(cfg, m, which, quadrature_estimate(cfg, m, which))};
    case Method::monte_carlo: {
        if (m == OutputMetric::kstar) throw ConfigError(0, "metric kstar is only available in closed form");
        const auto sim = montecarlo::simulate(cfg, mc, cfg.k());
        return simulation_rows(cfg, sim, m, which, cfg.k());
    }
    }
    return {};
}

nlohmann::ordered_json scenario_json(const ScenarioConfig& cfg)
{
    const auto& in = cfg.inputs();
    const auto& g = cfg.geometry();
    nlohmann::ordered_json j;
    j["d"] = in.d;
    j["upsilon"] = in.upsilon;
    j["lambda_b"] = in.lambda_b;
    j["lambda_e"] = in.lambda_e;
    j["link_b"] = fading_json(in.link_b);
    j["link_e"] = fading_json(in.link_e);
    j["n_a"] = in.n_a;
    j["n_b"] = in.n_b;
    j["n_e"] = in.n_e;
    j["eta_k"] = in.eta_k;
    j["eta_e"] = in.eta_e;
    j["varpi"] = cfg.varpi();
    j["rate"] = in.rate;
    j["k"] = in.k;
    j["ordering"] = metrics::to_string(in.ordering);
    j["eavesdropper"] = metrics::to_string(in.eavesdropper_policy);
    j["derived"] = {{"delta", g.delta()},       {"c_d", g.c_d()},   {"a_k", g.a_k()},
                    {"a_e", g.a_e()},           {"a_b1", g.a_b1()}, {"a_e1", g.a_e1()},
                    {"threshold", cfg.threshold()}, {"fading_b", fading_json(cfg.fading_b())},
                    {"fading_e", fading_json(cfg.fading_e())}};
    return j;
}

nlohmann::ordered_json mc_json(const montecarlo::MonteCarloConfig& mc)
{
    // Worker count is omitted: results do not depend on it.
    return {{"trials", mc.trials},
            {"seed", mc.master_seed},
            {"window_radius", mc.window_radius},
            {"ci_level", mc.ci_level},
            {"batch_size", mc.batch_size}};
}

} // namespace secrecy::cli
