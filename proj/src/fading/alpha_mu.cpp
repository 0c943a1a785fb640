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

#include "fading/alpha_mu.hpp"

#include "common/error.hpp"
#include "specfun/gamma.hpp"

#include <boost/math/special_functions/digamma.hpp>

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

namespace secrecy::fading {

namespace {

constexpr double kAlphaMin = 0.2, kAlphaMax = 20.0;
constexpr double kMuMin = 0.1, kMuMax = 50.0;
constexpr double kResidualTol = 1e-10;

double lg(double x) { return std::lgamma(x); }
double psi(double x) { return boost::math::digamma(x); }

// Log moment ratios E[g^2]/E[g]^2 and E[g^3]/E[g]^3; independent of omega.
struct RatioEq {
    double log_r2, log_r3;

    double f2(double a, double m) const { return lg(m + 4 / a) + lg(m) - 2 * lg(m + 2 / a) - log_r2; }
    double f3(double a, double m) const { return lg(m + 6 / a) + 2 * lg(m) - 3 * lg(m + 2 / a) - log_r3; }
};

bool in_bounds(double a, double m)
{
    return a >= kAlphaMin && a <= kAlphaMax && m >= kMuMin && m <= kMuMax;
}

struct NewtonOutcome {
    double alpha, mu;
    int iterations;
    bool ok;
};

// Damped Newton in (log alpha, log mu).
NewtonOutcome solve_newton(const RatioEq& eq, double alpha0, double mu0)
{
    double u = std::log(std::clamp(alpha0, kAlphaMin, kAlphaMax));
    double v = std::log(std::clamp(mu0, kMuMin, kMuMax));
    auto norm = [&](double uu, double vv) {
        const double a = std::exp(uu), m = std::exp(vv);
        return std::max(std::abs(eq.f2(a, m)), std::abs(eq.f3(a, m)));
    };
    double current = norm(u, v);
    for (int it = 0; it < 200; ++it) {
        if (current < kResidualTol) return {std::exp(u), std::exp(v), it, true};
        const double a = std::exp(u), m = std::exp(v);
        const double r2 = eq.f2(a, m), r3 = eq.f3(a, m);
        const double p1 = psi(m + 2 / a), p2 = psi(m + 4 / a), p3 = psi(m + 6 / a), p0 = psi(m);
        // Partial derivatives with respect to log alpha and log mu.
        const double d2u = a * (4 / (a * a)) * (p1 - p2);
        const double d2v = m * (p2 + p0 - 2 * p1);
        const double d3u = a * (6 / (a * a)) * (p1 - p3);
        const double d3v = m * (p3 + 2 * p0 - 3 * p1);
        const double det = d2u * d3v - d2v * d3u;
        if (!std::isfinite(det) || std::abs(det) < 1e-300) break;
        const double du = -(d3v * r2 - d2v * r3) / det;
        const double dv = -(-d3u * r2 + d2u * r3) / det;
        double step = 1.0;
        bool improved = false;
        for (int half = 0; half < 40; ++half, step *= 0.5) {
            const double nu = u + step * du, nv = v + step * dv;
            if (!in_bounds(std::exp(nu), std::exp(nv))) continue;
            const double trial = norm(nu, nv);
            if (trial < current) {
                u = nu;
                v = nv;
                current = trial;
                improved = true;
                break;
            }
        }
        if (!improved) break;
    }
    return {std::exp(u), std::exp(v), 200, current < kResidualTol};
}

// mu solving the second-moment equation for fixed alpha; the normalized
// second moment decreases monotonically in mu.
std::optional<double> mu_for_alpha(const RatioEq& eq, double a)
{
    double lo = std::log(kMuMin), hi = std::log(kMuMax);
    double flo = eq.f2(a, std::exp(lo)), fhi = eq.f2(a, std::exp(hi));
    if (flo * fhi > 0) return std::nullopt;
    for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
        const double mid = 0.5 * (lo + hi);
        const double fm = eq.f2(a, std::exp(mid));
        if ((fm > 0) == (flo > 0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return std::exp(0.5 * (lo + hi));
}

std::optional<std::pair<double, double>> solve_bisection(const RatioEq& eq)
{
    auto h = [&](double la) -> std::optional<double> {
        const double a = std::exp(la);
        const auto m = mu_for_alpha(eq, a);
        if (!m) return std::nullopt;
        return eq.f3(a, *m);
    };
    constexpr int grid = 80;
    const double l0 = std::log(kAlphaMin), l1 = std::log(kAlphaMax);
    std::optional<double> prev_val;
    double prev_la = l0;
    for (int i = 0; i <= grid; ++i) {
        const double la = l0 + (l1 - l0) * i / grid;
        const auto val = h(la);
        if (val && prev_val && (*val > 0) != (*prev_val > 0)) {
            double lo = prev_la, hi = la, flo = *prev_val;
            for (int j = 0; j < 200 && hi - lo > 1e-15; ++j) {
                const double mid = 0.5 * (lo + hi);
                const auto fm = h(mid);
                if (!fm) break;
                if ((*fm > 0) == (flo > 0)) {
                    lo = mid;
                    flo = *fm;
                } else {
                    hi = mid;
                }
            }
            const double a = std::exp(0.5 * (lo + hi));
            return std::make_pair(a, *mu_for_alpha(eq, a));
        }
        prev_val = val;
        prev_la = la;
    }
    return std::nullopt;
}

} // namespace

AlphaMuParams::AlphaMuParams(double alpha, double mu, double omega)
    : alpha_(alpha)
    , mu_(mu)
    , omega_(omega)
    , epsilon_(0.0)
    , theta_(0.0)
{
    if (!(alpha > 0.0 && std::isfinite(alpha)) || !(mu > 0.0 && std::isfinite(mu)) ||
        !(omega > 0.0 && std::isfinite(omega))) {
        std::ostringstream os;
        os << "alpha-mu parameters must be positive and finite (alpha=" << alpha << ", mu=" << mu
           << ", omega=" << omega << ")";
        throw DomainError(os.str());
    }
    epsilon_ = 1.0 / (omega_ * std::tgamma(mu_));
    theta_ = 1.0 / omega_;
}

AlphaMuParams AlphaMuParams::canonical(double alpha, double mu)
{
    if (!(alpha > 0.0) || !(mu > 0.0)) {
        AlphaMuParams(alpha, mu, 1.0); // throws with the standard message
    }
    return AlphaMuParams(alpha, mu, std::exp(std::lgamma(mu) - std::lgamma(mu + 2.0 / alpha)));
}

double pdf_power_gain(const AlphaMuParams& p, double x)
{
    if (!(x > 0.0)) throw DomainError("pdf_power_gain requires x > 0");
    const double half_alpha = 0.5 * p.alpha();
    const double log_pdf = std::log(half_alpha) + (half_alpha * p.mu() - 1.0) * std::log(x) -
                           half_alpha * p.mu() * std::log(p.omega()) - std::lgamma(p.mu()) -
                           std::pow(x / p.omega(), half_alpha);
    return std::exp(log_pdf);
}

double cdf_power_gain(const AlphaMuParams& p, double x)
{
    if (!(x >= 0.0)) throw DomainError("cdf_power_gain requires x >= 0");
    if (x == 0.0) return 0.0;
    return specfun::gamma_p(p.mu(), std::pow(x / p.omega(), 0.5 * p.alpha()));
}

double ccdf_power_gain(const AlphaMuParams& p, double x)
{
    if (!(x >= 0.0)) throw DomainError("ccdf_power_gain requires x >= 0");
    if (x == 0.0) return 1.0;
    return specfun::gamma_q(p.mu(), std::pow(x / p.omega(), 0.5 * p.alpha()));
}

double moment_power_gain(const AlphaMuParams& p, double order)
{
    const double arg = p.mu() + 2.0 * order / p.alpha();
    if (!(arg > 0.0)) {
        throw DomainError("moment of order " + std::to_string(order) +
                          " diverges (requires order > -alpha mu / 2)");
    }
    return std::exp(order * std::log(p.omega()) + std::lgamma(arg) - std::lgamma(p.mu()));
}

double sample_power_gain(const AlphaMuParams& p, montecarlo::RandomStream& rng)
{
    const double g = rng.gamma(p.mu());
    if (p.alpha() == 2.0) return p.omega() * g;
    return p.omega() * std::pow(g, 2.0 / p.alpha());
}

double sample_power_gain_sum(const AlphaMuParams& link, int count, montecarlo::RandomStream& rng)
{
    // Nakagami branches share a scale, so their sum is a single gamma draw.
    if (link.alpha() == 2.0) return link.omega() * rng.gamma(link.mu() * count);
    double s = 0.0;
    for (int i = 0; i < count; ++i) s += sample_power_gain(link, rng);
    return s;
}

std::array<double, 3> sum_moments(const AlphaMuParams& link, int count)
{
    if (count < 1) throw DomainError("sum of fading gains requires count >= 1");
    const double n = count;
    const double m1 = moment_power_gain(link, 1.0);
    const double m2 = moment_power_gain(link, 2.0);
    const double m3 = moment_power_gain(link, 3.0);
    return {
        n * m1,
        n * m2 + n * (n - 1) * m1 * m1,
        n * m3 + 3 * n * (n - 1) * m2 * m1 + n * (n - 1) * (n - 2) * m1 * m1 * m1,
    };
}

SumFit fit_sum(const AlphaMuParams& link, int count)
{
    if (count < 1) throw DomainError("fit_sum_params requires count >= 1, got " + std::to_string(count));
    if (count == 1) return {link, {0.0, 0.0, 0.0}, 0, false};

    const auto target = sum_moments(link, count);
    const RatioEq eq{std::log(target[1] / (target[0] * target[0])),
                     std::log(target[2] / (target[0] * target[0] * target[0]))};

    double alpha = 0.0, mu = 0.0;
    int iterations = 0;
    bool fallback = false;
    const auto newton = solve_newton(eq, link.alpha(), link.mu() * count);
    if (newton.ok) {
        alpha = newton.alpha;
        mu = newton.mu;
        iterations = newton.iterations;
    } else {
        const auto bis = solve_bisection(eq);
        fallback = true;
        if (bis) {
            // Polish the bracketed root.
            const auto polished = solve_newton(eq, bis->first, bis->second);
            alpha = polished.ok ? polished.alpha : bis->first;
            mu = polished.ok ? polished.mu : bis->second;
            iterations = newton.iterations + polished.iterations;
        }
        if (!bis || std::max(std::abs(eq.f2(alpha, mu)), std::abs(eq.f3(alpha, mu))) > kResidualTol) {
            std::ostringstream os;
            os << "alpha-mu sum fit did not converge for " << to_string(link) << " x" << count
               << " (newton residuals f2=" << eq.f2(newton.alpha, newton.mu)
               << ", f3=" << eq.f3(newton.alpha, newton.mu) << ")";
            throw ConvergenceError(os.str());
        }
    }
    const double omega = target[0] * std::exp(std::lgamma(mu) - std::lgamma(mu + 2.0 / alpha));
    const AlphaMuParams fitted(alpha, mu, omega);
    std::array<double, 3> residuals{};
    for (int k = 0; k < 3; ++k) {
        residuals[k] = std::abs(moment_power_gain(fitted, k + 1.0) - target[k]) / target[k];
    }
    return {fitted, residuals, iterations, fallback};
}

std::string to_string(const AlphaMuParams& p)
{
    std::ostringstream os;
    os.precision(12);
    os << "alpha-mu(alpha=" << p.alpha() << ", mu=" << p.mu() << ", omega=" << p.omega() << ")";
    return os.str();
}

} // namespace secrecy::fading
