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
#include "cli/run.hpp"

#include "common/error.hpp"
#include "metrics/secrecy_metrics.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace secrecy::cli {

using fading::AlphaMuParams;
using metrics::Case;
using metrics::Ordering;
using metrics::ScenarioConfig;
using metrics::ScenarioInputs;
using montecarlo::MetricEstimate;
using montecarlo::Provenance;

namespace {

// Window radius used for every simulated figure unless overridden.
constexpr double kFigureWindow = 10.0;

double db(double x) { return std::pow(10.0, x / 10.0); }

struct Curve {
    OutputMetric metric;
    Case pairing; // the legitimate ordering alone matters for cop and capacity
};

struct FigureContext {
    Table table;
    montecarlo::MonteCarloConfig mc;
    bool simulate = true;
    bool has_x = false;
};

std::string label_of(std::initializer_list<std::pair<const char*, double>> parts)
{
    std::ostringstream os;
    os.precision(6);
    bool first = true;
    for (const auto& [name, v] : parts) {
        os << (first ? "" : ";") << name << "=" << v;
        first = false;
    }
    return os.str();
}

std::vector<Curve> pnz_curves()
{
    return {{OutputMetric::pnz, Case::NN}, {OutputMetric::pnz, Case::NB}, {OutputMetric::pnz, Case::BN}, {OutputMetric::pnz, Case::BB}};
}

std::vector<int> range(int lo, int hi)
{
    std::vector<int> out;
    for (int k = lo; k <= hi; ++k) out.push_back(k);
    return out;
}

// Closed-form (and simulated) rows for every curve and user index at one
// scenario point.
void add_point(FigureContext& ctx, const ScenarioInputs& in, const std::vector<Curve>& curves,
               const std::vector<int>& ks, const std::string& series, std::optional<double> x)
{
    std::vector<std::string> extra;
    if (ctx.has_x) extra.push_back(format_value(x.value_or(0.0)));
    extra.push_back(series);

    std::vector<ScenarioConfig> cfgs;
    for (const auto& c : curves) {
        auto ci = in;
        ci.k = 1;
        ci.ordering = metrics::legitimate_ordering(c.pairing);
        ci.eavesdropper_policy = metrics::eavesdropper_ordering(c.pairing);
        cfgs.push_back(make_scenario(ci));
    }
    std::optional<montecarlo::SimulationResult> sim;
    if (ctx.simulate) sim = montecarlo::simulate(cfgs.front(), ctx.mc, *std::max_element(ks.begin(), ks.end()));

    for (std::size_t i = 0; i < curves.size(); ++i) {
        for (int k : ks) {
            const ScenarioConfig ck = cfgs[i].with_k(k);
            const auto& c = curves[i];
            ctx.table.rows.push_back({std::string(to_string(c.metric)), row_label(ck, c.metric, c.pairing), k,
                                      MetricEstimate::exact(closed_form_value(ck, c.metric, c.pairing, std::nullopt),
                                                            Provenance::closed_form),
                                      extra});
            if (sim) {
                for (auto& row : simulation_rows(cfgs[i], *sim, c.metric, c.pairing, k)) {
                    row.extra = extra;
                    ctx.table.rows.push_back(std::move(row));
                }
            }
        }
    }
    nlohmann::ordered_json p = {{"series", series}};
    if (x) p["x"] = *x;
    p["scenario"] = scenario_json(cfgs.front());
    ctx.table.config["points"].push_back(p);
}

ScenarioInputs base_inputs(double lambda_b, double lambda_e, int n_a, int n_b, int n_e, AlphaMuParams link_b,
                           AlphaMuParams link_e, int d, double upsilon)
{
    ScenarioInputs in;
    in.lambda_b = lambda_b;
    in.lambda_e = lambda_e;
    in.n_a = n_a;
    in.n_b = n_b;
    in.n_e = n_e;
    in.link_b = link_b;
    in.link_e = link_e;
    in.d = d;
    in.upsilon = upsilon;
    in.eta_k = in.eta_e = 1.0;
    in.rate = 1.0;
    return in;
}

AlphaMuParams am(double alpha, double mu) { return AlphaMuParams::canonical(alpha, mu); }

// Composite-gain densities of the k-th nearest and k-th best user.
void fig2(FigureContext& ctx)
{
    ctx.table.extra_columns = {"z", "series"};
    auto in = base_inputs(2.0, 2.0, 1, 1, 1, am(2, 3), am(2, 3), 2, 2);
    for (int k : {1, 2, 3}) {
        in.k = k;
        const ScenarioConfig cfg = make_scenario(in);
        for (int i = 1; i <= 80; ++i) {
            const double z = 0.05 * i;
            for (Ordering o : {Ordering::nearest, Ordering::best}) {
                const double v = o == Ordering::nearest ? metrics::pdf_composite_nearest(cfg, z)
                                                        : metrics::pdf_composite_best(cfg, z);
                ctx.table.rows.push_back({"pdf_composite", std::string(metrics::to_string(o)), k,
                                          MetricEstimate::exact(v, Provenance::closed_form),
                                          {format_value(z), "base"}});
            }
        }
        ctx.table.config["points"].push_back({{"series", "base"}, {"scenario", scenario_json(cfg)}});
    }
}

// Nearest-user outage against k for several fading laws.
void fig3(FigureContext& ctx)
{
    ctx.table.extra_columns = {"series"};
    for (auto [alpha, mu] : {std::pair{1.5, 1.0}, {2.0, 1.0}, {2.0, 3.0}, {3.0, 2.0}}) {
        auto in = base_inputs(1.0, 1.0, 1, 1, 1, am(alpha, mu), am(alpha, mu), 2, 2);
        in.eta_k = in.eta_e = db(5.0);
        add_point(ctx, in, {{OutputMetric::cop, Case::NN}}, range(1, 10), label_of({{"alpha", alpha}, {"mu", mu}}),
                  std::nullopt);
    }
}

// Outage against lambda_b for k in {2, 4}, nearest and best.
void fig4(FigureContext& ctx)
{
    ctx.table.extra_columns = {"lambda_b", "series"};
    ctx.has_x = true;
    for (int i = 1; i <= 10; ++i) {
        const double lb = 0.1 * i;
        const auto in = base_inputs(lb, lb, 1, 1, 1, am(2, 3), am(2, 3), 2, 4);
        add_point(ctx, in, {{OutputMetric::cop, Case::NN}, {OutputMetric::cop, Case::BB}}, {2, 4}, "base", lb);
    }
}

// Nearest-nearest PNZ against k for several fading laws.
void fig5(FigureContext& ctx)
{
    ctx.table.extra_columns = {"series"};
    struct Set {
        double alpha, mu_m, mu_w;
    };
    for (const Set s : {Set{2, 1, 1}, Set{2, 2, 3}, Set{3, 1, 1}, Set{3, 2, 3}}) {
        const auto in = base_inputs(0.2, 0.1, 1, 1, 1, am(s.alpha, s.mu_m), am(s.alpha, s.mu_w), 2, 2);
        add_point(ctx, in, {{OutputMetric::pnz, Case::NN}}, range(1, 8),
                  label_of({{"alpha", s.alpha}, {"mu_m", s.mu_m}, {"mu_w", s.mu_w}}), std::nullopt);
    }
}

// All four pairings against k.
void fig6(FigureContext& ctx)
{
    ctx.table.extra_columns = {"series"};
    const auto in = base_inputs(0.2, 0.1, 2, 1, 2, am(2, 1), am(2, 4), 2, 2);
    add_point(ctx, in, pnz_curves(), range(1, 8), "base", std::nullopt);
}

// All four pairings against k for several path-loss exponents in 3-D.
void fig7(FigureContext& ctx)
{
    ctx.table.extra_columns = {"series"};
    for (double upsilon : {2.0, 3.0, 4.0}) {
        const auto in = base_inputs(0.2, 0.1, 2, 1, 2, am(2, 2), am(2, 3), 3, upsilon);
        add_point(ctx, in, pnz_curves(), range(1, 8), label_of({{"upsilon", upsilon}}), std::nullopt);
    }
}

// Maximum secure best-user index against varpi.
void fig8(FigureContext& ctx)
{
    ctx.table.extra_columns = {"varpi_db", "series"};
    for (double tau : {0.1, 0.3}) {
        for (double ratio : {1.0, 2.0, 4.0}) {
            const std::string series = label_of({{"tau", tau}, {"lambda_ratio", ratio}});
            nlohmann::ordered_json pts = nlohmann::ordered_json::array();
            for (int i = 0; i <= 20; ++i) {
                const double w_db = -10.0 + 2.0 * i;
                auto in = base_inputs(0.1 * ratio, 0.1, 1, 1, 1, am(3, 2), am(2, 3), 2, 2);
                in.eta_k = db(w_db);
                const ScenarioConfig cfg = make_scenario(in);
                const double ks = metrics::max_secure_best_users(cfg, tau);
                ctx.table.rows.push_back({"kstar", "best", 0, MetricEstimate::exact(ks, Provenance::closed_form),
                                          {format_value(w_db), series}});
                if (i == 0) {
                    ctx.table.config["points"].push_back(
                        {{"series", series}, {"tau", tau}, {"scenario", scenario_json(cfg)}});
                }
            }
        }
    }
}

// First-user PNZ against varpi.
void fig9(FigureContext& ctx)
{
    ctx.table.extra_columns = {"varpi_db", "series"};
    ctx.has_x = true;
    for (double w_db : {-10.0, -5.0, 0.0, 5.0, 10.0, 15.0, 20.0}) {
        auto in = base_inputs(0.2, 0.1, 2, 2, 2, am(2, 2), am(2, 3), 3, 2);
        in.eta_k = db(w_db);
        add_point(ctx, in, pnz_curves(), {1}, "base", w_db);
    }
}

// First-user PNZ against the legitimate antenna count.
void fig10(FigureContext& ctx)
{
    ctx.table.extra_columns = {"n_b", "series"};
    ctx.has_x = true;
    for (int n_e : {1, 2}) {
        for (int n_b = 1; n_b <= 6; ++n_b) {
            auto in = base_inputs(0.2, 0.1, 2, n_b, n_e, am(2, 1), am(2, 3), 3, 2);
            in.eta_k = db(10.0);
            add_point(ctx, in, pnz_curves(), {1}, label_of({{"n_e", static_cast<double>(n_e)}}), n_b);
        }
    }
}

// Ergodic secrecy capacity of the four pairings against k.
void fig11(FigureContext& ctx)
{
    ctx.table.extra_columns = {"series"};
    auto in = base_inputs(1.0, 1.0, 1, 1, 1, am(2, 1), am(2, 1), 2, 2);
    in.eta_k = db(15.0);
    in.eta_e = db(0.0);
    add_point(ctx, in,
              {{OutputMetric::ergodic_secrecy, Case::NN},
               {OutputMetric::ergodic_secrecy, Case::NB},
               {OutputMetric::ergodic_secrecy, Case::BN},
               {OutputMetric::ergodic_secrecy, Case::BB}},
              range(1, 6), "base", std::nullopt);
}

} // namespace

Table build_figure(const RunSpec& spec)
{
    const std::string id = spec.figure.value_or("");
    FigureContext ctx;
    ctx.mc = spec.mc;
    if (!spec.window_given) ctx.mc.window_radius = kFigureWindow;
    if (!spec.trials_given) ctx.mc.trials = id == "fig11" ? 100000 : 1000000;
    ctx.simulate = spec.simulate;
    ctx.table.config["figure"] = id;
    ctx.table.config["mc"] = mc_json(ctx.mc);
    ctx.table.config["simulate"] = ctx.simulate;
    ctx.table.config["points"] = nlohmann::ordered_json::array();
    if (id == "fig2") fig2(ctx);
    else if (id == "fig3") fig3(ctx);
    else if (id == "fig4") fig4(ctx);
    else if (id == "fig5") fig5(ctx);
    else if (id == "fig6") fig6(ctx);
    else if (id == "fig7") fig7(ctx);
    else if (id == "fig8") fig8(ctx);
    else if (id == "fig9") fig9(ctx);
    else if (id == "fig10") fig10(ctx);
    else if (id == "fig11") fig11(ctx);
    else throw ConfigError(0, "unknown figure '" + id + "' (supported: fig2..fig11)");
    return ctx.table;
}

} // namespace secrecy::cli
