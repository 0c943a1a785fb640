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

#include "metrics/secrecy_metrics.hpp"

#include "common/error.hpp"
#include "specfun/fox_h.hpp"
#include "specfun/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace secrecy::metrics::formula {

using fading::AlphaMuParams;
using specfun::FoxHParams;
using specfun::fox_h;

namespace {

void require_order(int k)
{
    if (k < 1) throw DomainError("order k must be >= 1, got " + std::to_string(k));
}

double clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

} // namespace

FoxKernel pdf_nearest_kernel(const AlphaMuParams& f, double a, double delta, int k, double z)
{
    const double scale = std::pow(a, 1.0 / delta);
    return {FoxHParams(1, 1, {{1.0 - k - 1.0 / delta, 1.0 / delta}}, {{f.mu() - 2.0 / f.alpha(), 2.0 / f.alpha()}}),
            f.theta() * z / scale};
}

FoxKernel cdf_nearest_tail_kernel(const AlphaMuParams& f, double a, double delta, int k, double z)
{
    const double scale = std::pow(a, 1.0 / delta);
    return {FoxHParams(2, 1, {{1.0 - k, 1.0 / delta}, {1.0, 1.0}}, {{0.0, 1.0}, {f.mu(), 2.0 / f.alpha()}}),
            f.theta() * z / scale};
}

FoxKernel cdf_nearest_lower_kernel(const AlphaMuParams& f, double a, double delta, int k, double z)
{
    const double scale = std::pow(a, 1.0 / delta);
    return {FoxHParams(1, 2, {{0.0, 1.0}, {1.0 - k - 1.0 / delta, 1.0 / delta}},
                       {{f.mu() - 2.0 / f.alpha(), 2.0 / f.alpha()}, {-1.0, 1.0}}),
            f.theta() * z / scale};
}

FoxKernel pnz_nn_kernel(const AlphaMuParams& fk, const AlphaMuParams& fe, double a_k, double a_e, double delta,
                        double varpi, int k)
{
    return {FoxHParams(3, 2, {{1.0 - fk.mu(), 2.0 / fk.alpha()}, {0.0, 1.0 / delta}, {1.0, 1.0}},
                       {{0.0, 1.0}, {fe.mu(), 2.0 / fe.alpha()}, {double(k), 1.0 / delta}}),
            varpi * (fe.theta() / fk.theta()) * std::pow(a_k / a_e, 1.0 / delta)};
}

FoxKernel pnz_nb_kernel(const AlphaMuParams& fk, double a_k, double a_e1, double delta, double varpi, int k)
{
    return {FoxHParams(1, 3, {{1.0, 1.0}, {1.0 - fk.mu(), 2.0 / fk.alpha()}, {0.0, 1.0 / delta}},
                       {{double(k), 1.0 / delta}, {0.0, 1.0}}),
            varpi / fk.theta() * std::pow(a_k / a_e1, 1.0 / delta)};
}

FoxKernel pnz_bn_kernel(const AlphaMuParams& fe, double a_e, double a_b1, double delta, double varpi, int k)
{
    return {FoxHParams(1, 3, {{1.0, 1.0}, {1.0 - fe.mu(), 2.0 / fe.alpha()}, {1.0 - k, 1.0 / delta}},
                       {{1.0, 1.0 / delta}, {0.0, 1.0}}),
            std::pow(a_e / a_b1, 1.0 / delta) / (fe.theta() * varpi)};
}

FoxKernel capacity_nearest_kernel(const AlphaMuParams& f, double a, double delta, int k, double eta)
{
    return {FoxHParams(2, 3, {{1.0, 1.0}, {1.0, 1.0}, {1.0 - f.mu(), 2.0 / f.alpha()}},
                       {{1.0, 1.0}, {double(k), 1.0 / delta}, {0.0, 1.0}}),
            eta * std::pow(a, 1.0 / delta) / f.theta()};
}

FoxKernel capacity_best_kernel(double a1, double delta, int k, double eta)
{
    return {FoxHParams(2, 2, {{1.0, delta}, {1.0, delta}}, {{double(k), 1.0}, {1.0, delta}, {0.0, delta}}),
            a1 * std::pow(eta, delta)};
}

double pdf_composite_nearest(const AlphaMuParams& f, double a, double delta, int k, double z)
{
    require_order(k);
    if (!(z > 0.0)) throw DomainError("composite density requires z > 0");
    const double scale = std::pow(a, 1.0 / delta);
    const auto h = pdf_nearest_kernel(f, a, delta, k, z);
    const double v = f.epsilon() / (scale * std::tgamma(k)) * fox_h(h.params, h.z);
    return std::max(v, 0.0);
}

double cdf_composite_nearest(const AlphaMuParams& f, double a, double delta, int k, double z)
{
    require_order(k);
    if (!(z >= 0.0)) throw DomainError("composite CDF requires z >= 0");
    if (z == 0.0) return 0.0;
    const double scale = std::pow(a, 1.0 / delta);
    const auto h = cdf_nearest_tail_kernel(f, a, delta, k, z);
    const double tail = fox_h(h.params, h.z) / std::exp(std::lgamma(f.mu()) + std::lgamma(k));
    if (tail < 0.5) return clamp01(1.0 - tail);
    // Lower branch: the density integrated from 0, free of the 1 - H cancellation.
    const auto lower = cdf_nearest_lower_kernel(f, a, delta, k, z);
    return clamp01(f.epsilon() / (scale * std::tgamma(k)) * z * fox_h(lower.params, lower.z));
}

double pdf_composite_best(double a1, double delta, int k, double z)
{
    require_order(k);
    if (!(z > 0.0)) throw DomainError("composite density requires z > 0");
    const double t = a1 * std::pow(z, -delta);
    return std::exp(k * std::log(t) - t - std::lgamma(k)) * delta / z;
}

double cdf_composite_best(double a1, double delta, int k, double z)
{
    require_order(k);
    if (!(z >= 0.0)) throw DomainError("composite CDF requires z >= 0");
    if (z == 0.0) return 0.0;
    return specfun::gamma_q(k, a1 * std::pow(z, -delta));
}

double pnz_nn(const AlphaMuParams& fk, const AlphaMuParams& fe, double a_k, double a_e,
              double delta, double varpi, int k)
{
    require_order(k);
    const auto h = pnz_nn_kernel(fk, fe, a_k, a_e, delta, varpi, k);
    const double norm = std::exp(std::lgamma(fk.mu()) + std::lgamma(fe.mu()) + std::lgamma(k));
    return clamp01(1.0 - fox_h(h.params, h.z) / norm);
}

double pnz_nb(const AlphaMuParams& fk, double a_k, double a_e1, double delta, double varpi, int k)
{
    require_order(k);
    const auto h = pnz_nb_kernel(fk, a_k, a_e1, delta, varpi, k);
    const double norm = std::exp(std::lgamma(fk.mu()) + std::lgamma(k));
    return clamp01(fox_h(h.params, h.z) / norm);
}

double pnz_bn(const AlphaMuParams& fe, double a_e, double a_b1, double delta, double varpi, int k)
{
    require_order(k);
    const auto h = pnz_bn_kernel(fe, a_e, a_b1, delta, varpi, k);
    const double norm = std::exp(std::lgamma(fe.mu()) + std::lgamma(k));
    return clamp01(1.0 - fox_h(h.params, h.z) / norm);
}

double best_user_base(double a_b1, double a_e1, double delta, double varpi)
{
    return a_b1 / (a_b1 + a_e1 * std::pow(varpi, -delta));
}

double pnz_bb(double a_b1, double a_e1, double delta, double varpi, int k)
{
    require_order(k);
    return std::pow(best_user_base(a_b1, a_e1, delta, varpi), k);
}

int max_secure_best_users(double base, double tau)
{
    if (!(tau > 0.0 && tau < 1.0)) throw DomainError("tau must lie in (0, 1)");
    if (!(base > 0.0 && base < 1.0)) throw DomainError("best-user base must lie in (0, 1)");
    const double raw = std::log(tau) / std::log(base);
    if (raw > 1e9) throw DomainError("secure best-user count overflows");
    // floor with a relative guard so exact powers (b^k == tau) round to k.
    auto k = static_cast<long long>(std::floor(raw * (1.0 + 1e-12)));
    const double slack = tau * (1.0 - 1e-12);
    while (k > 0 && std::pow(base, double(k)) < slack) --k;
    while (std::pow(base, double(k + 1)) >= slack) ++k;
    return static_cast<int>(k);
}

double capacity_nearest(const AlphaMuParams& f, double a, double delta, int k, double eta)
{
    require_order(k);
    if (!(eta >= 0.0)) throw DomainError("SNR scale must be non-negative");
    if (eta == 0.0) return 0.0;
    const auto h = capacity_nearest_kernel(f, a, delta, k, eta);
    const double norm = std::exp(std::lgamma(f.mu()) + std::lgamma(k)) * std::numbers::ln2;
    return std::max(fox_h(h.params, h.z) / norm, 0.0);
}

double capacity_best(double a1, double delta, int k, double eta)
{
    require_order(k);
    if (!(eta >= 0.0)) throw DomainError("SNR scale must be non-negative");
    if (eta == 0.0) return 0.0;
    const auto h = capacity_best_kernel(a1, delta, k, eta);
    const double norm = std::exp(std::lgamma(k)) * std::numbers::ln2;
    return std::max(delta * fox_h(h.params, h.z) / norm, 0.0);
}

} // namespace secrecy::metrics::formula

namespace secrecy::metrics {

namespace {

const stochgeo::NetworkGeometry& geo(const ScenarioConfig& c) { return c.geometry(); }

} // namespace

double pdf_composite_nearest(const ScenarioConfig& c, double z)
{
    return formula::pdf_composite_nearest(c.fading_b(), geo(c).a_k(), geo(c).delta(), c.k(), z);
}

double cdf_composite_nearest(const ScenarioConfig& c, double z)
{
    return formula::cdf_composite_nearest(c.fading_b(), geo(c).a_k(), geo(c).delta(), c.k(), z);
}

double pdf_composite_best(const ScenarioConfig& c, double z)
{
    return formula::pdf_composite_best(geo(c).a_b1(), geo(c).delta(), c.k(), z);
}

double cdf_composite_best(const ScenarioConfig& c, double z)
{
    return formula::cdf_composite_best(geo(c).a_b1(), geo(c).delta(), c.k(), z);
}

double cop_nearest(const ScenarioConfig& c) { return cdf_composite_nearest(c, c.threshold()); }

double cop_best(const ScenarioConfig& c) { return cdf_composite_best(c, c.threshold()); }

double cop(const ScenarioConfig& c)
{
    return c.ordering() == Ordering::nearest ? cop_nearest(c) : cop_best(c);
}

double pnz_nn(const ScenarioConfig& c)
{
    return formula::pnz_nn(c.fading_b(), c.fading_e(), geo(c).a_k(), geo(c).a_e(), geo(c).delta(),
                           c.varpi(), c.k());
}

double pnz_nb(const ScenarioConfig& c)
{
    return formula::pnz_nb(c.fading_b(), geo(c).a_k(), geo(c).a_e1(), geo(c).delta(), c.varpi(), c.k());
}

double pnz_bn(const ScenarioConfig& c)
{
    return formula::pnz_bn(c.fading_e(), geo(c).a_e(), geo(c).a_b1(), geo(c).delta(), c.varpi(), c.k());
}

double pnz_bb(const ScenarioConfig& c)
{
    return formula::pnz_bb(geo(c).a_b1(), geo(c).a_e1(), geo(c).delta(), c.varpi(), c.k());
}

double pnz(const ScenarioConfig& c, Case which)
{
    switch (which) {
    case Case::NN: return pnz_nn(c);
    case Case::NB: return pnz_nb(c);
    case Case::BN: return pnz_bn(c);
    case Case::BB: return pnz_bb(c);
    }
    throw DomainError("unknown case");
}

int max_secure_best_users(const ScenarioConfig& c, double tau)
{
    return formula::max_secure_best_users(
        formula::best_user_base(geo(c).a_b1(), geo(c).a_e1(), geo(c).delta(), c.varpi()), tau);
}

double ergodic_capacity_nearest(const ScenarioConfig& c)
{
    return formula::capacity_nearest(c.fading_b(), geo(c).a_k(), geo(c).delta(), c.k(), c.eta_k());
}

double ergodic_capacity_best(const ScenarioConfig& c)
{
    return formula::capacity_best(geo(c).a_b1(), geo(c).delta(), c.k(), c.eta_k());
}

double wiretap_capacity_nearest(const ScenarioConfig& c)
{
    return formula::capacity_nearest(c.fading_e(), geo(c).a_e(), geo(c).delta(), 1, c.eta_e());
}

double wiretap_capacity_best(const ScenarioConfig& c)
{
    return formula::capacity_best(geo(c).a_e1(), geo(c).delta(), 1, c.eta_e());
}

double ergodic_secrecy_capacity(const ScenarioConfig& c, Case which)
{
    const double main = legitimate_ordering(which) == Ordering::nearest ? ergodic_capacity_nearest(c)
                                                                        : ergodic_capacity_best(c);
    const double tap = eavesdropper_ordering(which) == Ordering::nearest ? wiretap_capacity_nearest(c)
                                                                         : wiretap_capacity_best(c);
    return std::max(main - tap, 0.0);
}

std::vector<NamedKernel> fox_h_kernels(const ScenarioConfig& c, double z)
{
    const auto& g = geo(c);
    const double d = g.delta();
    const int k = c.k();
    return {
        {"pdf_composite_nearest", formula::pdf_nearest_kernel(c.fading_b(), g.a_k(), d, k, z)},
        {"cdf_composite_nearest_tail", formula::cdf_nearest_tail_kernel(c.fading_b(), g.a_k(), d, k, z)},
        {"cdf_composite_nearest_lower", formula::cdf_nearest_lower_kernel(c.fading_b(), g.a_k(), d, k, z)},
        {"pnz_nn", formula::pnz_nn_kernel(c.fading_b(), c.fading_e(), g.a_k(), g.a_e(), d, c.varpi(), k)},
        {"pnz_nb", formula::pnz_nb_kernel(c.fading_b(), g.a_k(), g.a_e1(), d, c.varpi(), k)},
        {"pnz_bn", formula::pnz_bn_kernel(c.fading_e(), g.a_e(), g.a_b1(), d, c.varpi(), k)},
        {"capacity_nearest", formula::capacity_nearest_kernel(c.fading_b(), g.a_k(), d, k, c.eta_k())},
        {"capacity_best", formula::capacity_best_kernel(g.a_b1(), d, k, c.eta_k())},
        {"wiretap_capacity_nearest", formula::capacity_nearest_kernel(c.fading_e(), g.a_e(), d, 1, c.eta_e())},
        {"wiretap_capacity_best", formula::capacity_best_kernel(g.a_e1(), d, 1, c.eta_e())},
    };
}

} // namespace secrecy::metrics
