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

#include "montecarlo/quadrature_oracle.hpp"

#include "common/error.hpp"
#include "metrics/secrecy_metrics.hpp"
#include "specfun/quadrature.hpp"
#include "stochgeo/geometry.hpp"


#include <cmath>
#include <numbers>
#include <sstream>

namespace secrecy::montecarlo {

using metrics::Case;
using metrics::Ordering;
using metrics::ScenarioConfig;
namespace formula = metrics::formula;

namespace {

constexpr double kRelTol = 1e-7;

// Integral over [lower, inf) through x = lower + s t / (1 - t), t in [0, 1).
template <typename F>
double integrate_tail(F f, double lower, double s, const char* what)
{
    auto g = [&](double t) {
        if (t >= 1.0) return 0.0;
        const double u = 1.0 - t;
        const double v = f(lower + s * t / u);
        return v == 0.0 ? 0.0 : v * s / (u * u);
    };
    specfun::QuadratureOptions opt;
    opt.rel_tol = 0.1 * kRelTol;
    opt.initial_panels = 16;
    opt.max_panels = 20000;
    double value = 0.0, err = 0.0;
    try {
        const auto q = specfun::integrate_adaptive(g, 0.0, 1.0, opt);
        value = q.value;
        err = q.abs_error;
    } catch (const ConvergenceError& e) {
        throw ConvergenceError(std::string(what) + " quadrature: " + e.what());
    }
    if (!std::isfinite(value) || err > kRelTol * std::abs(value) + 1e-14) {
        std::ostringstream os;
        os << what << " quadrature missed the " << kRelTol << " tolerance (value " << value
           << ", residual " << err << ")";
        throw ConvergenceError(os.str());
    }
    return value;
}

struct Laws {
    const ScenarioConfig& cfg;
    double delta, a_k, a_e, a_b1, a_e1;
    int k;

    explicit Laws(const ScenarioConfig& c)
        : cfg(c)
        , delta(c.geometry().delta())
        , a_k(c.geometry().a_k())
        , a_e(c.geometry().a_e())
        , a_b1(c.geometry().a_b1())
        , a_e1(c.geometry().a_e1())
        , k(c.k())
    {
    }

    // Characteristic scales of r^upsilon / xi and of the composite gain.
    double y_scale(double a, int order) const { return std::pow(order / a, 1.0 / delta); }
    double z_scale(const fading::AlphaMuParams& f, double a, int order) const
    {
        return fading::moment_power_gain(f, 1.0) / y_scale(a, order);
    }

    double cdf_zk(double z) const { return formula::cdf_composite_nearest(cfg.fading_b(), a_k, delta, k, z); }
    double pdf_zk(double z) const { return formula::pdf_composite_nearest(cfg.fading_b(), a_k, delta, k, z); }
    double cdf_ze(double z) const { return formula::cdf_composite_nearest(cfg.fading_e(), a_e, delta, 1, z); }
    double pdf_xik(double x) const { return stochgeo::pdf_kth_best(k, a_b1, delta, x); }
    double pdf_xie(double x) const { return stochgeo::pdf_kth_best(1, a_e1, delta, x); }
    double cdf_xik(double x) const { return stochgeo::cdf_kth_best(k, a_b1, delta, x); }
};

double cop(const Laws& l)
{
    const double thr = l.cfg.threshold();
    if (thr == 0.0) return 0.0;
    if (l.cfg.ordering() == Ordering::nearest) {
        // Condition on the k-th nearest r^upsilon: P(g < y threshold).
        const auto& f = l.cfg.fading_b();
        return integrate_tail(
            [&](double y) {
                return y <= 0.0 ? 0.0
                                : fading::cdf_power_gain(f, y * thr) *
                                      stochgeo::pdf_kth_distance_pow(l.k, l.a_k, l.delta, y);
            },
            0.0, l.y_scale(l.a_k, l.k), "outage");
    }
    // Best: xi_k above 1 / threshold.
    return integrate_tail([&](double x) { return l.pdf_xik(x); }, 1.0 / thr, l.y_scale(l.a_b1, l.k), "outage");
}

double pnz(const Laws& l, Case c)
{
    const double w = l.cfg.varpi();
    switch (c) {
    case Case::NN:
        return integrate_tail([&](double y) { return y <= 0.0 ? 0.0 : l.cdf_ze(w * y) * l.pdf_zk(y); }, 0.0,
                              l.z_scale(l.cfg.fading_b(), l.a_k, l.k), "non-zero secrecy");
    case Case::NB:
        return 1.0 - integrate_tail(
                         [&](double y) { return y <= 0.0 ? 0.0 : l.cdf_zk(1.0 / (w * y)) * l.pdf_xie(y); }, 0.0,
                         l.y_scale(l.a_e1, 1), "non-zero secrecy");
    case Case::BN:
        return integrate_tail([&](double y) { return y <= 0.0 ? 0.0 : l.cdf_ze(w / y) * l.pdf_xik(y); }, 0.0,
                              l.y_scale(l.a_b1, l.k), "non-zero secrecy");
    case Case::BB:
        return integrate_tail([&](double y) { return y <= 0.0 ? 0.0 : l.cdf_xik(w * y) * l.pdf_xie(y); }, 0.0,
                              l.y_scale(l.a_e1, 1), "non-zero secrecy");
    }
    throw DomainError("unknown case");
}

// E[log2(1 + eta Z)] against the composite density of the nearest ordering.
double capacity_nearest(const fading::AlphaMuParams& f, double a, double delta, int k, double eta,
                        double scale)
{
    if (eta == 0.0) return 0.0;
    return integrate_tail(
        [&](double z) {
            return z <= 0.0 ? 0.0
                            : std::log1p(eta * z) / std::numbers::ln2 *
                                  formula::pdf_composite_nearest(f, a, delta, k, z);
        },
        0.0, scale, "capacity");
}

double capacity_best(double a1, double delta, int k, double eta, double scale)
{
    if (eta == 0.0) return 0.0;
    return integrate_tail(
        [&](double x) {
            return x <= 0.0 ? 0.0 : std::log1p(eta / x) / std::numbers::ln2 * stochgeo::pdf_kth_best(k, a1, delta, x);
        },
        0.0, scale, "capacity");
}

double main_capacity(const Laws& l, Ordering o)
{
    if (o == Ordering::nearest) {
        return capacity_nearest(l.cfg.fading_b(), l.a_k, l.delta, l.k, l.cfg.eta_k(),
                                l.z_scale(l.cfg.fading_b(), l.a_k, l.k));
    }
    return capacity_best(l.a_b1, l.delta, l.k, l.cfg.eta_k(), l.y_scale(l.a_b1, l.k));
}

double wiretap_capacity(const Laws& l, Ordering o)
{
    if (o == Ordering::nearest) {
        return capacity_nearest(l.cfg.fading_e(), l.a_e, l.delta, 1, l.cfg.eta_e(),
                                l.z_scale(l.cfg.fading_e(), l.a_e, 1));
    }
    return capacity_best(l.a_e1, l.delta, 1, l.cfg.eta_e(), l.y_scale(l.a_e1, 1));
}

} // namespace

std::string_view to_string(Metric m)
{
    switch (m) {
    case Metric::cop: return "cop";
    case Metric::pnz: return "pnz";
    case Metric::capacity: return "capacity";
    case Metric::wiretap_capacity: return "wiretap_capacity";
    case Metric::ergodic_secrecy: return "ergodic_secrecy";
    }
    return "?";
}

Metric parse_metric(std::string_view s)
{
    for (Metric m : {Metric::cop, Metric::pnz, Metric::capacity, Metric::wiretap_capacity, Metric::ergodic_secrecy}) {
        if (s == to_string(m)) return m;
    }
    throw DomainError("unknown metric '" + std::string(s) + "'");
}

MetricEstimate integrate_defining(Metric metric, const ScenarioConfig& cfg, std::optional<Case> which)
{
    const Laws l(cfg);
    const Case c = which.value_or(metrics::case_of(cfg.ordering(), cfg.eavesdropper_policy()));
    double v = 0.0;
    switch (metric) {
    case Metric::cop: v = cop(l); break;
    case Metric::pnz: v = pnz(l, c); break;
    case Metric::capacity: v = main_capacity(l, cfg.ordering()); break;
    case Metric::wiretap_capacity: v = wiretap_capacity(l, cfg.eavesdropper_policy()); break;
    case Metric::ergodic_secrecy:
        v = std::max(main_capacity(l, metrics::legitimate_ordering(c)) -
                         wiretap_capacity(l, metrics::eavesdropper_ordering(c)),
                     0.0);
        break;
    }
    return MetricEstimate::exact(v, Provenance::quadrature);
}

} // namespace secrecy::montecarlo
