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

#include "montecarlo/simulation.hpp"

#include "common/error.hpp"
#include "montecarlo/random_stream.hpp"
#include "specfun/gamma.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

namespace secrecy::montecarlo {

using metrics::Case;
using metrics::ScenarioConfig;
using stochgeo::Side;

namespace {

constexpr std::uint32_t kLegitimateStream = 0;
constexpr std::uint32_t kEavesdropperStream = 1;
constexpr double kMaxMeanPoints = 5.0e6;

// Streaming mean and squared deviations, mergeable in a fixed order.
struct Moments {
    std::uint64_t n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) noexcept
    {
        ++n;
        const double d = x - mean;
        mean += d / static_cast<double>(n);
        m2 += d * (x - mean);
    }

    void merge(const Moments& o) noexcept
    {
        if (o.n == 0) return;
        if (n == 0) {
            *this = o;
            return;
        }
        const double na = static_cast<double>(n), nb = static_cast<double>(o.n);
        const double d = o.mean - mean;
        const double total = na + nb;
        mean += d * nb / total;
        m2 += o.m2 + d * d * na * nb / total;
        n += o.n;
    }
};

struct KAccumulator {
    std::uint64_t cop_nearest = 0, cop_best = 0;
    std::array<std::uint64_t, 4> pnz{};
    Moments cap_nearest, cap_best;
    std::array<Moments, 4> diff, clipped;

    void merge(const KAccumulator& o) noexcept
    {
        cop_nearest += o.cop_nearest;
        cop_best += o.cop_best;
        for (int c = 0; c < 4; ++c) {
            pnz[c] += o.pnz[c];
            diff[c].merge(o.diff[c]);
            clipped[c].merge(o.clipped[c]);
        }
        cap_nearest.merge(o.cap_nearest);
        cap_best.merge(o.cap_best);
    }
};

struct BatchAccumulator {
    std::uint64_t accepted = 0, rejected = 0;
    Moments tap_nearest, tap_best;
    std::vector<KAccumulator> per_k;

    explicit BatchAccumulator(int k_max = 0)
        : per_k(static_cast<std::size_t>(k_max))
    {
    }

    void merge(const BatchAccumulator& o)
    {
        accepted += o.accepted;
        rejected += o.rejected;
        tap_nearest.merge(o.tap_nearest);
        tap_best.merge(o.tap_best);
        for (std::size_t i = 0; i < per_k.size(); ++i) per_k[i].merge(o.per_k[i]);
    }
};

struct SideModel {
    double scale;   // lambda c_d
    double limit;   // scale R^d: Poisson mean inside the window
    double inv_delta;
    fading::AlphaMuParams link;
    int branches;
};

SideModel side_model(const ScenarioConfig& cfg, Side side, double radius)
{
    const auto& g = cfg.geometry();
    const auto& in = cfg.inputs();
    const double scale = g.density(side) * g.c_d();
    const double limit = scale * std::pow(radius, g.d());
    if (limit > kMaxMeanPoints) {
        throw DomainError("simulation window holds " + std::to_string(limit) +
                          " points on average; reduce the window or the density");
    }
    const bool legit = side == Side::legitimate;
    return {scale, limit, 1.0 / g.delta(), legit ? in.link_b : in.link_e,
            in.n_a * (legit ? in.n_b : in.n_e)};
}

// Composite gains g / r^upsilon of every point in the window, in order of
// increasing distance.
void draw_side(const SideModel& m, RandomStream& rng, std::vector<double>& gains)
{
    gains.clear();
    for (double v = rng.exponential(); v <= m.limit; v += rng.exponential()) {
        const double path_loss = std::pow(v / m.scale, m.inv_delta);
        gains.push_back(fading::sample_power_gain_sum(m.link, m.branches, rng) / path_loss);
    }
}

double log2_1p(double x) { return std::log1p(x) / std::numbers::ln2; }

void run_batch(const ScenarioConfig& cfg, const MonteCarloConfig& mc, const SideModel& mb,
               const SideModel& me, int k_max, std::uint64_t first, std::uint64_t last,
               BatchAccumulator& acc)
{
    const double eta_k = cfg.eta_k(), eta_e = cfg.eta_e(), thr = cfg.threshold();
    std::vector<double> gb, ge, best;
    for (std::uint64_t r = first; r < last; ++r) {
        RandomStream rb(mc.master_seed, r, kLegitimateStream);
        RandomStream re(mc.master_seed, r, kEavesdropperStream);
        draw_side(mb, rb, gb);
        draw_side(me, re, ge);
        if (gb.size() < static_cast<std::size_t>(k_max) || ge.empty()) {
            ++acc.rejected;
            continue;
        }
        ++acc.accepted;
        best.assign(gb.begin(), gb.end());
        std::partial_sort(best.begin(), best.begin() + k_max, best.end(), std::greater<>());
        const double ze_near = ge.front();
        const double ze_best = *std::max_element(ge.begin(), ge.end());
        const double tap_n = log2_1p(eta_e * ze_near);
        const double tap_b = log2_1p(eta_e * ze_best);
        acc.tap_nearest.add(tap_n);
        acc.tap_best.add(tap_b);
        for (int k = 1; k <= k_max; ++k) {
            auto& a = acc.per_k[k - 1];
            const double zn = gb[k - 1], zb = best[k - 1];
            a.cop_nearest += zn < thr;
            a.cop_best += zb < thr;
            a.pnz[int(Case::NN)] += eta_k * zn > eta_e * ze_near;
            a.pnz[int(Case::NB)] += eta_k * zn > eta_e * ze_best;
            a.pnz[int(Case::BN)] += eta_k * zb > eta_e * ze_near;
            a.pnz[int(Case::BB)] += eta_k * zb > eta_e * ze_best;
            const double cn = log2_1p(eta_k * zn), cb = log2_1p(eta_k * zb);
            a.cap_nearest.add(cn);
            a.cap_best.add(cb);
            const std::array<double, 4> d{cn - tap_n, cn - tap_b, cb - tap_n, cb - tap_b};
            for (int c = 0; c < 4; ++c) {
                a.diff[c].add(d[c]);
                a.clipped[c].add(std::max(d[c], 0.0));
            }
        }
    }
}

MetricEstimate clipped_difference(const Moments& main, const Moments& tap, const Moments& diff,
                                  double ci_level)
{
    // Interval from the paired difference, shifted onto the difference of means.
    MetricEstimate e = mean_estimate(diff.mean, diff.m2, diff.n, ci_level);
    const double value = main.mean - tap.mean;
    e.value = std::max(value, 0.0);
    e.ci_low = std::max(value - e.half_width, 0.0);
    e.ci_high = std::max(value + e.half_width, 0.0);
    return e;
}

} // namespace

double auto_window_radius(const ScenarioConfig& cfg, Side side, int k_max)
{
    if (k_max < 1) throw DomainError("k_max must be >= 1");
    const auto& g = cfg.geometry();
    const double scale = g.density(side) * g.c_d();
    // Enough points: P(Poisson(m) < k_max) = Q(k_max, m) < 1e-9.
    const double m_count = specfun::gamma_q_inverse(k_max, 1e-9);
    double radius = std::pow(m_count / scale, 1.0 / g.d());

    // Points outside can matter only if their xi = r^upsilon / g falls below
    // the 1 - 1e-7 quantile of xi_{k_max}.
    const double a1 = g.a_measure(side);
    const double x_star = std::pow(specfun::gamma_q_inverse(k_max, 1e-7) / a1, 1.0 / g.delta());
    const auto& f = g.fading(side);
    auto outside = [&](double r) {
        const double u0 = std::pow(r, g.d());
        auto integrand = [&](double w) {
            const double u = u0 + w;
            return fading::ccdf_power_gain(f, std::pow(u, 1.0 / g.delta()) / x_star);
        };
        return scale * boost::math::quadrature::gauss_kronrod<double, 31>::integrate(
                           integrand, 0.0, std::numeric_limits<double>::infinity(), 10, 1e-6);
    };
    for (int i = 0; outside(radius) >= 1e-6; ++i) {
        if (i > 400 || scale * std::pow(radius, g.d()) > kMaxMeanPoints) {
            throw DomainError("no simulation window keeps the truncation error below 1e-6");
        }
        radius *= 1.1;
    }
    return radius;
}

SimulationResult simulate(const ScenarioConfig& cfg, const MonteCarloConfig& mc, int k_max)
{
    if (mc.trials < 1) throw DomainError("trials must be >= 1");
    if (k_max < 1) throw DomainError("k_max must be >= 1");
    if (mc.batch_size < 1) throw DomainError("batch_size must be >= 1");
    normal_quantile(mc.ci_level);

    SimulationResult out;
    out.trials = mc.trials;
    out.window_b = mc.window_radius > 0.0 ? mc.window_radius : auto_window_radius(cfg, Side::legitimate, k_max);
    out.window_e = mc.window_radius > 0.0 ? mc.window_radius : auto_window_radius(cfg, Side::eavesdropper, 1);
    const SideModel mb = side_model(cfg, Side::legitimate, out.window_b);
    const SideModel me = side_model(cfg, Side::eavesdropper, out.window_e);

    const std::uint64_t batches = (mc.trials + mc.batch_size - 1) / mc.batch_size;
    std::vector<BatchAccumulator> parts(batches, BatchAccumulator(k_max));
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t b = next++; b < batches; b = next++) {
            const std::uint64_t first = b * mc.batch_size;
            run_batch(cfg, mc, mb, me, k_max, first, std::min(first + mc.batch_size, mc.trials), parts[b]);
        }
    };
    const int workers = static_cast<int>(std::clamp<std::uint64_t>(std::max(mc.worker_hint, 1), 1, batches));
    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    BatchAccumulator total(k_max);
    for (const auto& p : parts) total.merge(p);

    out.rejected = total.rejected;
    const std::uint64_t n = total.accepted;
    if (n == 0) throw DomainError("every realization was rejected; enlarge the simulation window");
    const double ci = mc.ci_level;
    out.wiretap_nearest = mean_estimate(total.tap_nearest.mean, total.tap_nearest.m2, n, ci);
    out.wiretap_best = mean_estimate(total.tap_best.mean, total.tap_best.m2, n, ci);
    const bool no_rate = cfg.rate() == 0.0;
    for (int k = 1; k <= k_max; ++k) {
        const auto& a = total.per_k[k - 1];
        KMetrics m;
        if (no_rate) {
            // Zero threshold: outage is impossible, not merely unobserved.
            m.cop_nearest = m.cop_best = MetricEstimate::exact(0.0, Provenance::monte_carlo);
            m.cop_nearest.trials_used = m.cop_best.trials_used = n;
        } else {
            m.cop_nearest = proportion_estimate(a.cop_nearest, n, ci);
            m.cop_best = proportion_estimate(a.cop_best, n, ci);
        }
        for (int c = 0; c < 4; ++c) m.pnz[c] = proportion_estimate(a.pnz[c], n, ci);
        m.capacity_nearest = mean_estimate(a.cap_nearest.mean, a.cap_nearest.m2, n, ci);
        m.capacity_best = mean_estimate(a.cap_best.mean, a.cap_best.m2, n, ci);
        for (int c = 0; c < 4; ++c) {
            const Case cs = static_cast<Case>(c);
            const auto& main = metrics::legitimate_ordering(cs) == metrics::Ordering::nearest ? a.cap_nearest : a.cap_best;
            const auto& tap = metrics::eavesdropper_ordering(cs) == metrics::Ordering::nearest ? total.tap_nearest : total.tap_best;
            m.secrecy_clipped_difference[c] = clipped_difference(main, tap, a.diff[c], ci);
            m.secrecy_mean_of_clipped[c] = mean_estimate(a.clipped[c].mean, a.clipped[c].m2, n, ci);
        }
        auto stamp = [&](MetricEstimate& e) { e.rejected = out.rejected; };
        stamp(m.cop_nearest);
        stamp(m.cop_best);
        stamp(m.capacity_nearest);
        stamp(m.capacity_best);
        for (int c = 0; c < 4; ++c) {
            stamp(m.pnz[c]);
            stamp(m.secrecy_clipped_difference[c]);
            stamp(m.secrecy_mean_of_clipped[c]);
        }
        out.per_k.push_back(m);
    }
    out.wiretap_nearest.rejected = out.wiretap_best.rejected = out.rejected;
    return out;
}

MetricEstimate simulate_cop(const ScenarioConfig& cfg, const MonteCarloConfig& mc)
{
    const auto r = simulate(cfg, mc, cfg.k());
    return cfg.ordering() == metrics::Ordering::nearest ? r.at(cfg.k()).cop_nearest : r.at(cfg.k()).cop_best;
}

MetricEstimate simulate_pnz(const ScenarioConfig& cfg, Case c, const MonteCarloConfig& mc)
{
    return simulate(cfg, mc, cfg.k()).at(cfg.k()).pnz[int(c)];
}

ErgodicSecrecyEstimates simulate_ergodic_secrecy(const ScenarioConfig& cfg, Case c, const MonteCarloConfig& mc)
{
    const auto r = simulate(cfg, mc, cfg.k());
    return {r.at(cfg.k()).secrecy_clipped_difference[int(c)], r.at(cfg.k()).secrecy_mean_of_clipped[int(c)]};
}

} // namespace secrecy::montecarlo
