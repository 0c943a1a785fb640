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

#include "cli/run.hpp"

#include "cli/evaluate.hpp"
#include "common/error.hpp"
#include "metrics/secrecy_metrics.hpp"

#include <cmath>
#include <exception>

namespace secrecy::cli {

using metrics::Case;
using metrics::Ordering;
using metrics::ScenarioConfig;
using montecarlo::MetricEstimate;

namespace {

constexpr double kQuadratureTol = 1e-5;
constexpr double kCapacityQuadratureTol = 1e-4;

nlohmann::ordered_json run_json(const RunSpec& spec)
{
    nlohmann::ordered_json j;
    j["command"] = to_string(spec.command.value_or(Command::eval));
    j["metric"] = to_string(spec.metric);
    if (spec.which) j["case"] = metrics::to_string(*spec.which);
    j["method"] = to_string(spec.method);
    if (spec.scenario.tau) j["tau"] = *spec.scenario.tau;
    if (spec.sweep) j["sweep"] = {{"param", spec.sweep->name}, {"values", spec.sweep->values}};
    return j;
}

Table eval_table(const RunSpec& spec)
{
    const ScenarioConfig cfg = make_scenario(to_inputs(spec.scenario));
    Table t;
    t.rows = evaluate(cfg, spec.metric, spec.which, spec.method, spec.scenario.tau, spec.mc);
    t.config = {{"scenario", scenario_json(cfg)}, {"mc", mc_json(spec.mc)}, {"run", run_json(spec)}};
    return t;
}

Table sweep_table(const RunSpec& spec)
{
    Table t;
    t.extra_columns = {spec.sweep->name};
    nlohmann::ordered_json points = nlohmann::ordered_json::array();
    for (double x : spec.sweep->values) {
        RunSpec point = spec;
        apply_parameter(point, spec.sweep->name, x);
        const ScenarioConfig cfg = make_scenario(to_inputs(point.scenario));
        for (auto& row : evaluate(cfg, point.metric, point.which, point.method, point.scenario.tau, point.mc)) {
            row.extra = {format_value(x)};
            t.rows.push_back(std::move(row));
        }
        points.push_back(scenario_json(cfg));
    }
    t.config = {{"mc", mc_json(spec.mc)}, {"run", run_json(spec)}, {"points", points}};
    return t;
}

bool capacity_like(OutputMetric m)
{
    return m == OutputMetric::capacity || m == OutputMetric::wiretap_capacity || m == OutputMetric::ergodic_secrecy;
}

// Closed form, quadrature and Monte Carlo for every metric at the
// configured k, both orderings and all four pairings.
Table validate_table(const RunSpec& spec, bool& passed)
{
    const auto base_in = to_inputs(spec.scenario);
    const ScenarioConfig base = make_scenario(base_in);
    const int k = base.k();
    const auto sim = montecarlo::simulate(base, spec.mc, k);

    Table t;
    t.extra_columns = {"status"};
    auto check = [&](const ScenarioConfig& cfg, OutputMetric m, std::optional<Case> which) {
        const double closed = closed_form_value(cfg, m, which, std::nullopt);
        const std::string label = row_label(cfg, m, which);
        t.rows.push_back({std::string(to_string(m)), label, k,
                          MetricEstimate::exact(closed, montecarlo::Provenance::closed_form), {"reference"}});

        const auto quad = quadrature_estimate(cfg, m, which);
        const double tol = capacity_like(m) ? kCapacityQuadratureTol : kQuadratureTol;
        const bool quad_ok = std::abs(quad.value - closed) <= tol * std::abs(closed) + 1e-12;
        t.rows.push_back({std::string(to_string(m)), label, k, quad, {quad_ok ? "pass" : "fail"}});
        passed = passed && quad_ok;

        for (auto& row : simulation_rows(cfg, sim, m, which, k)) {
            if (row.metric == to_string(m)) {
                const bool mc_ok = row.estimate.covers(closed);
                row.extra = {mc_ok ? "pass" : "fail"};
                passed = passed && mc_ok;
            } else {
                row.extra = {"info"};
            }
            t.rows.push_back(std::move(row));
        }
    };
    for (Ordering o : {Ordering::nearest, Ordering::best}) {
        auto in = base_in;
        in.ordering = o;
        in.eavesdropper_policy = o;
        const ScenarioConfig cfg = make_scenario(in);
        check(cfg, OutputMetric::cop, std::nullopt);
        check(cfg, OutputMetric::capacity, std::nullopt);
        check(cfg, OutputMetric::wiretap_capacity, std::nullopt);
    }
    for (Case c : {Case::NN, Case::NB, Case::BN, Case::BB}) check(base, OutputMetric::pnz, c);
    for (Case c : {Case::NN, Case::NB, Case::BN, Case::BB}) check(base, OutputMetric::ergodic_secrecy, c);
    if (spec.scenario.tau) {
        const double ks = closed_form_value(base, OutputMetric::kstar, std::nullopt, spec.scenario.tau);
        t.rows.push_back({"kstar", "best", k, MetricEstimate::exact(ks, montecarlo::Provenance::closed_form),
                          {"reference"}});
    }
    t.config = {{"scenario", scenario_json(base)},
                {"mc", mc_json(spec.mc)},
                {"run", run_json(spec)},
                {"tolerance", {{"quadrature", kQuadratureTol}, {"quadrature_capacity", kCapacityQuadratureTol}}},
                {"simulation", {{"window_b", sim.window_b}, {"window_e", sim.window_e}, {"rejected", sim.rejected}}}};
    return t;
}

} // namespace

Table build_table(const RunSpec& spec, bool& passed)
{
    passed = true;
    switch (spec.command.value_or(Command::eval)) {
    case Command::eval: return eval_table(spec);
    case Command::sweep: return sweep_table(spec);
    case Command::validate: return validate_table(spec, passed);
    case Command::figure: return build_figure(spec);
    }
    return {};
}

int run(RunSpec spec, std::string& message)
{
    try {
        finalize(spec);
        bool passed = true;
        const Table t = build_table(spec, passed);
        write_table(t, spec.output_path, spec.format);
        if (!passed) {
            message = "validation failed: at least one check is outside tolerance";
            return exit_validation_failure;
        }
        return exit_success;
    } catch (const ConfigError& e) {
        message = std::string("config error: ") + e.what();
        return exit_config_error;
    } catch (const Error& e) {
        message = std::string("numeric error: ") + e.what();
        return exit_numeric_error;
    } catch (const std::exception& e) {
        message = std::string("numeric error: ") + e.what();
        return exit_numeric_error;
    }
}

} // namespace secrecy::cli
