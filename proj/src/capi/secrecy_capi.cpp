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

#include "secrecy/secrecy.h"

#include "cli/evaluate.hpp"
#include "cli/run.hpp"
#include "cli/run_spec.hpp"
#include "common/error.hpp"
#include "metrics/secrecy_metrics.hpp"
#include "montecarlo/quadrature_oracle.hpp"
#include "montecarlo/simulation.hpp"
#include "specfun/fox_h.hpp"

#include <charconv>
#include <new>
#include <string>

struct secrecy_scenario {
    secrecy::metrics::ScenarioConfig cfg;
};

struct secrecy_run {
    secrecy::cli::RunSpec spec;
};

namespace {

using namespace secrecy;

thread_local std::string g_last_error;

secrecy_status fail(secrecy_status s, const std::string& msg)
{
    g_last_error = msg;
    return s;
}

// Runs f, translating the exception hierarchy into status codes.
template <typename F>
secrecy_status guarded(F&& f)
{
    try {
        g_last_error.clear();
        f();
        return SECRECY_OK;
    } catch (const ConfigError& e) {
        return fail(SECRECY_ERR_CONFIG, e.what());
    } catch (const PoleError& e) {
        return fail(SECRECY_ERR_POLE, e.what());
    } catch (const DomainError& e) {
        return fail(SECRECY_ERR_DOMAIN, e.what());
    } catch (const ConvergenceError& e) {
        return fail(SECRECY_ERR_CONVERGENCE, e.what());
    } catch (const std::bad_alloc&) {
        return fail(SECRECY_ERR_INTERNAL, "out of memory");
    } catch (const std::exception& e) {
        return fail(SECRECY_ERR_INTERNAL, e.what());
    }
}

secrecy_status null_arg(const char* name) { return fail(SECRECY_ERR_INVALID_ARGUMENT, std::string(name) + " is NULL"); }

bool valid_ordering(int o) { return o == SECRECY_NEAREST || o == SECRECY_BEST; }
bool valid_case(int c) { return c >= SECRECY_CASE_NN && c <= SECRECY_CASE_BB; }

metrics::Ordering ordering_of(secrecy_ordering o)
{
    return o == SECRECY_BEST ? metrics::Ordering::best : metrics::Ordering::nearest;
}

fading::AlphaMuParams link_of(const secrecy_alpha_mu& p)
{
    return p.omega > 0.0 ? fading::AlphaMuParams(p.alpha, p.mu, p.omega) : fading::AlphaMuParams::canonical(p.alpha, p.mu);
}

secrecy_alpha_mu to_c(const fading::AlphaMuParams& p) { return {p.alpha(), p.mu(), p.omega()}; }

montecarlo::MonteCarloConfig mc_of(const secrecy_mc_config& c)
{
    montecarlo::MonteCarloConfig mc;
    if (c.trials < 1) throw DomainError("Monte Carlo trials must be at least 1");
    if (c.workers < 1) throw DomainError("Monte Carlo workers must be at least 1");
    if (!(c.ci_level > 0.0 && c.ci_level < 1.0)) throw DomainError("ci_level must lie in (0, 1)");
    if (!(c.window_radius >= 0.0)) throw DomainError("window_radius must be non-negative");
    mc.trials = c.trials;
    mc.master_seed = c.master_seed;
    mc.window_radius = c.window_radius;
    mc.worker_hint = c.workers;
    mc.ci_level = c.ci_level;
    return mc;
}

secrecy_estimate to_c(const montecarlo::MetricEstimate& e)
{
    secrecy_estimate o;
    o.value = e.value;
    o.half_width = e.half_width;
    o.ci_low = e.ci_low;
    o.ci_high = e.ci_high;
    o.provenance = static_cast<secrecy_provenance>(static_cast<int>(e.provenance));
    o.trials_used = e.trials_used;
    o.rejected = e.rejected;
    return o;
}

std::uint64_t parse_u64(const char* value, const char* what)
{
    std::uint64_t v = 0;
    const std::string s(value);
    const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) {
        throw ConfigError(0, std::string(what) + " expects an unsigned integer, got '" + s + "'");
    }
    return v;
}

} // namespace

extern "C" {

const char* secrecy_version(void) { return "1.0.0"; }

const char* secrecy_status_string(secrecy_status status)
{
    switch (status) {
    case SECRECY_OK: return "ok";
    case SECRECY_ERR_INVALID_ARGUMENT: return "invalid argument";
    case SECRECY_ERR_DOMAIN: return "domain error";
    case SECRECY_ERR_POLE: return "pole error";
    case SECRECY_ERR_CONVERGENCE: return "convergence error";
    case SECRECY_ERR_CONFIG: return "config error";
    case SECRECY_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

const char* secrecy_last_error(void) { return g_last_error.c_str(); }

void secrecy_scenario_params_default(secrecy_scenario_params* params)
{
    if (!params) return;
    *params = secrecy_scenario_params{};
    params->d = 2;
    params->upsilon = 2.0;
    params->lambda_b = params->lambda_e = 1.0;
    params->link_b = params->link_e = secrecy_alpha_mu{2.0, 1.0, 0.0};
    params->n_a = params->n_b = params->n_e = 1;
    params->eta_k = params->eta_e = 1.0;
    params->rate = 1.0;
    params->k = 1;
    params->ordering = params->eavesdropper = SECRECY_NEAREST;
}

void secrecy_mc_config_default(secrecy_mc_config* mc)
{
    if (!mc) return;
    const montecarlo::MonteCarloConfig d;
    mc->trials = d.trials;
    mc->master_seed = d.master_seed;
    mc->window_radius = d.window_radius;
    mc->workers = d.worker_hint;
    mc->ci_level = d.ci_level;
}

secrecy_status secrecy_scenario_create(const secrecy_scenario_params* params, secrecy_scenario** out)
{
    if (!params) return null_arg("params");
    if (!out) return null_arg("out");
    *out = nullptr;
    if (!valid_ordering(params->ordering) || !valid_ordering(params->eavesdropper)) {
        return fail(SECRECY_ERR_INVALID_ARGUMENT, "unknown ordering value");
    }
    return guarded([&] {
        metrics::ScenarioInputs in;
        in.d = params->d;
        in.upsilon = params->upsilon;
        in.lambda_b = params->lambda_b;
        in.lambda_e = params->lambda_e;
        in.link_b = link_of(params->link_b);
        in.link_e = link_of(params->link_e);
        in.n_a = params->n_a;
        in.n_b = params->n_b;
        in.n_e = params->n_e;
        in.eta_k = params->eta_k;
        in.eta_e = params->eta_e;
        in.rate = params->rate;
        in.k = params->k;
        in.ordering = ordering_of(params->ordering);
        in.eavesdropper_policy = ordering_of(params->eavesdropper);
        *out = new secrecy_scenario{metrics::ScenarioConfig(in)};
    });
}

void secrecy_scenario_destroy(secrecy_scenario* scenario) { delete scenario; }

secrecy_status secrecy_scenario_fading(const secrecy_scenario* scenario, secrecy_alpha_mu* fading_b,
                                       secrecy_alpha_mu* fading_e)
{
    if (!scenario) return null_arg("scenario");
    if (fading_b) *fading_b = to_c(scenario->cfg.fading_b());
    if (fading_e) *fading_e = to_c(scenario->cfg.fading_e());
    return SECRECY_OK;
}

secrecy_status secrecy_eval(const secrecy_scenario* scenario, secrecy_metric metric, secrecy_case which,
                            secrecy_method method, const secrecy_mc_config* mc, secrecy_estimate* out)
{
    if (!scenario) return null_arg("scenario");
    if (!out) return null_arg("out");
    if (metric < SECRECY_METRIC_COP || metric > SECRECY_METRIC_ERGODIC_SECRECY) {
        return fail(SECRECY_ERR_INVALID_ARGUMENT, "unknown metric value");
    }
    if (!valid_case(which)) return fail(SECRECY_ERR_INVALID_ARGUMENT, "unknown case value");
    if (method < SECRECY_METHOD_CLOSED_FORM || method > SECRECY_METHOD_MONTE_CARLO) {
        return fail(SECRECY_ERR_INVALID_ARGUMENT, "unknown method value");
    }
    if (method == SECRECY_METHOD_MONTE_CARLO && !mc) return null_arg("mc");
    return guarded([&] {
        const auto m = static_cast<cli::OutputMetric>(static_cast<int>(metric));
        const auto c = static_cast<metrics::Case>(static_cast<int>(which));
        const auto meth = static_cast<cli::Method>(static_cast<int>(method));
        montecarlo::MonteCarloConfig config;
        if (mc) config = mc_of(*mc);
        const auto rows = cli::evaluate(scenario->cfg, m, c, meth, std::nullopt, config);
        *out = to_c(rows.front().estimate);
    });
}

secrecy_status secrecy_simulate_ergodic_secrecy(const secrecy_scenario* scenario, secrecy_case which,
                                                const secrecy_mc_config* mc, secrecy_estimate* clipped_difference,
                                                secrecy_estimate* mean_of_clipped)
{
    if (!scenario) return null_arg("scenario");
    if (!mc) return null_arg("mc");
    if (!valid_case(which)) return fail(SECRECY_ERR_INVALID_ARGUMENT, "unknown case value");
    return guarded([&] {
        const auto r = montecarlo::simulate_ergodic_secrecy(scenario->cfg, static_cast<metrics::Case>(static_cast<int>(which)),
                                                            mc_of(*mc));
        if (clipped_difference) *clipped_difference = to_c(r.clipped_difference);
        if (mean_of_clipped) *mean_of_clipped = to_c(r.mean_of_clipped);
    });
}

secrecy_status secrecy_max_secure_best_users(const secrecy_scenario* scenario, double tau, int* out)
{
    if (!scenario) return null_arg("scenario");
    if (!out) return null_arg("out");
    return guarded([&] { *out = metrics::max_secure_best_users(scenario->cfg, tau); });
}

secrecy_status secrecy_composite_pdf(const secrecy_scenario* scenario, secrecy_ordering ordering, double z,
                                     double* out)
{
    if (!scenario) return null_arg("scenario");
    if (!out) return null_arg("out");
    if (!valid_ordering(ordering)) return fail(SECRECY_ERR_INVALID_ARGUMENT, "unknown ordering value");
    return guarded([&] {
        *out = ordering == SECRECY_NEAREST ? metrics::pdf_composite_nearest(scenario->cfg, z)
                                           : metrics::pdf_composite_best(scenario->cfg, z);
    });
}

secrecy_status secrecy_composite_cdf(const secrecy_scenario* scenario, secrecy_ordering ordering, double z,
                                     double* out)
{
    if (!scenario) return null_arg("scenario");
    if (!out) return null_arg("out");
    if (!valid_ordering(ordering)) return fail(SECRECY_ERR_INVALID_ARGUMENT, "unknown ordering value");
    return guarded([&] {
        *out = ordering == SECRECY_NEAREST ? metrics::cdf_composite_nearest(scenario->cfg, z)
                                           : metrics::cdf_composite_best(scenario->cfg, z);
    });
}

secrecy_status secrecy_fox_h(int m, int n, size_t p, const double* a, const double* A, size_t q, const double* b,
                             const double* B, double z, double* out)
{
    if (!out) return null_arg("out");
    if (p > 0 && (!a || !A)) return null_arg("upper coefficients");
    if (q > 0 && (!b || !B)) return null_arg("lower coefficients");
    return guarded([&] {
        std::vector<specfun::FoxPair> up, lo;
        for (size_t j = 0; j < p; ++j) up.push_back({a[j], A[j]});
        for (size_t j = 0; j < q; ++j) lo.push_back({b[j], B[j]});
        *out = specfun::fox_h(specfun::FoxHParams(m, n, std::move(up), std::move(lo)), z);
    });
}

secrecy_status secrecy_run_parse(const char* text, secrecy_run** out)
{
    if (!text) return null_arg("text");
    if (!out) return null_arg("out");
    *out = nullptr;
    return guarded([&] { *out = new secrecy_run{cli::parse_config(text)}; });
}

secrecy_status secrecy_run_set(secrecy_run* run, const char* option, const char* value)
{
    if (!run) return null_arg("run");
    if (!option) return null_arg("option");
    if (!value) return null_arg("value");
    return guarded([&] {
        const std::string o(option);
        auto& s = run->spec;
        if (o == "command") s.command = cli::parse_command(value);
        else if (o == "figure") s.figure = std::string(value);
        else if (o == "out") s.output_path = value;
        else if (o == "format") s.format = cli::parse_format(value);
        else if (o == "seed") s.mc.master_seed = parse_u64(value, "seed");
        else if (o == "trials") {
            const auto n = parse_u64(value, "trials");
            if (n < 1) throw ConfigError(0, "trials must be at least 1");
            s.mc.trials = n;
            s.trials_given = true;
        } else if (o == "workers") {
            const auto n = parse_u64(value, "workers");
            if (n < 1 || n > 4096) throw ConfigError(0, "workers must lie in [1, 4096]");
            s.mc.worker_hint = static_cast<int>(n);
        } else {
            throw ConfigError(0, "unknown run option '" + o + "'");
        }
    });
}

secrecy_status secrecy_run_execute(secrecy_run* run, int* exit_code)
{
    if (!run) return null_arg("run");
    if (!exit_code) return null_arg("exit_code");
    g_last_error.clear();
    std::string message;
    *exit_code = cli::run(run->spec, message);
    g_last_error = message;
    return SECRECY_OK;
}

void secrecy_run_destroy(secrecy_run* run) { delete run; }

} // extern "C"
