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

#include "doctest.h"

#include "common/error.hpp"
#include "specfun/fox_h.hpp"
#include "specfun/gamma.hpp"

#include <cmath>
#include <numbers>

using namespace secrecy;
using namespace secrecy::specfun;

namespace {

// Test-only log-gamma: recurrence to Re(z) >= 15 plus Stirling series.
cplx oracle_log_gamma(cplx z)
{
    cplx shift_sum = 0.0;
    while (z.real() < 15.0) {
        shift_sum += std::log(z);
        z += 1.0;
    }
    constexpr double b[] = {1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680, 1.0 / 1188,
                            -691.0 / 360360, 1.0 / 156, -3617.0 / 122400};
    cplx series = 0.0;
    cplx zpow = z;
    for (double coeff : b) {
        series += coeff / zpow;
        zpow *= z * z;
    }
    return (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * std::numbers::pi) + series -
           shift_sum;
}

// Brute-force Mellin-Barnes: fixed-step trapezoid over [-T, T] (spectrally
// accurate for this analytic, exponentially decaying integrand) with the
// oracle log-gamma above.
double brute_force_h(const FoxHParams& h, double z, double c, double T, int steps)
{
    auto theta = [&](cplx s) {
        cplx acc = -s * std::log(z);
        for (int j = 0; j < h.q(); ++j) {
            const auto& pr = h.lower()[j];
            if (j < h.m()) acc += oracle_log_gamma(pr.coeff + pr.scale * s);
            else acc -= oracle_log_gamma(1.0 - pr.coeff - pr.scale * s);
        }
        for (int j = 0; j < h.p(); ++j) {
            const auto& pr = h.upper()[j];
            if (j < h.n()) acc += oracle_log_gamma(1.0 - pr.coeff - pr.scale * s);
            else acc -= oracle_log_gamma(pr.coeff + pr.scale * s);
        }
        return std::exp(acc);
    };
    const double dt = 2.0 * T / steps;
    cplx sum = 0.0;
    for (int i = 0; i <= steps; ++i) {
        const double t = -T + i * dt;
        const double w = (i == 0 || i == steps) ? 0.5 : 1.0;
        sum += w * theta(cplx(c, t));
    }
    return (sum * dt).real() / (2.0 * std::numbers::pi);
}

} // namespace

TEST_CASE("fox_h: reduction to the exponential over a log grid")
{
    const FoxHParams h(1, 0, {}, {{0.0, 1.0}});
    for (double lz = std::log(1e-3); lz <= std::log(50.0) + 1e-12; lz += 0.25) {
        const double z = std::exp(lz);
        const FoxHResult r = fox_h_eval(h, z);
        CHECK_MESSAGE(std::abs(r.value - std::exp(-z)) <= 1e-8 * std::max(1.0, std::exp(-z)),
                      "z=" << z);
        CHECK(std::abs(r.imag_residue) <= 1e-8 * std::max(std::abs(r.value), 1e-300) + 1e-300);
    }
}

TEST_CASE("fox_h: alpha-mu CDF kernel reduces to the upper incomplete gamma")
{
    // alpha = 2, mu = 3: H^{2,0}_{1,2}[x | (1,1); (0,1),(3,1)] = Gamma(3, x).
    const FoxHParams h(2, 0, {{1.0, 1.0}}, {{0.0, 1.0}, {3.0, 1.0}});
    const double expected = std::tgamma(3.0) * (1.0 - lower_incomplete_gamma(3.0, 1.0) / std::tgamma(3.0));
    CHECK(fox_h(h, 1.0) == doctest::Approx(expected).epsilon(1e-9));
    // General alpha: Gamma(mu, x^{alpha/2}).
    for (double alpha : {1.0, 2.5, 4.0}) {
        for (double mu : {0.5, 2.0, 5.0}) {
            const FoxHParams g(2, 0, {{1.0, 1.0}}, {{0.0, 1.0}, {mu, 2.0 / alpha}});
            for (double x : {0.05, 0.7, 2.0, 6.0}) {
                const double ref = upper_incomplete_gamma(mu, std::pow(x, alpha / 2.0));
                CHECK_MESSAGE(std::abs(fox_h(g, x) - ref) <= 1e-9 * std::max(1.0, ref),
                              "alpha=" << alpha << " mu=" << mu << " x=" << x);
            }
        }
    }
}

TEST_CASE("fox_h: H^{1,1}_{1,1} beta-type reduction")
{
    // Gamma(s) Gamma(a - s) inverts to Gamma(a) (1 + x)^-a.
    for (double a : {0.5, 1.0, 3.5}) {
        const FoxHParams h(1, 1, {{1.0 - a, 1.0}}, {{0.0, 1.0}});
        for (double x : {0.01, 0.5, 1.0, 9.0}) {
            CHECK(fox_h(h, x) == doctest::Approx(std::tgamma(a) * std::pow(1.0 + x, -a)).epsilon(1e-9));
        }
    }
}

TEST_CASE("fox_h: composite-gain density instance against brute-force Mellin-Barnes")
{
    // k-th nearest density kernel: (1-k-1/delta, 1/delta); (mu-2/alpha, 2/alpha)
    // at k = 2, delta = 0.5, alpha = 3, mu = 2.
    const double k = 2.0, delta = 0.5, alpha = 3.0, mu = 2.0;
    const FoxHParams h(1, 1, {{1.0 - k - 1.0 / delta, 1.0 / delta}},
                       {{mu - 2.0 / alpha, 2.0 / alpha}});
    for (double z : {0.2, 1.3, 4.0}) {
        const double value = fox_h(h, z);
        const double other_c = h.abscissa_at(0.2);
        const double brute = brute_force_h(h, z, other_c, 60.0, 24000);
        CHECK_MESSAGE(std::abs(value - brute) <= 1e-6 * std::abs(brute), "z=" << z);
    }
}

TEST_CASE("fox_h: contour independence")
{
    const FoxHParams h(3, 2, {{1.0 - 2.0, 1.0}, {0.0, 1.0}, {1.0, 1.0}},
                       {{0.0, 1.0}, {3.0, 1.0}, {2.0, 1.0}});
    for (double z : {0.1, 1.0, 10.0}) {
        const double a = fox_h_eval(h, z, {.abscissa = h.abscissa_at(0.25)}).value;
        const double b = fox_h_eval(h, z, {.abscissa = h.abscissa_at(0.75)}).value;
        CHECK(std::abs(a - b) <= 1e-6 * std::abs(a));
    }
}

TEST_CASE("fox_h: parameter validation")
{
    CHECK_THROWS_AS(FoxHParams(2, 0, {}, {{0.0, 1.0}}), DomainError);
    CHECK_THROWS_AS(FoxHParams(1, 0, {}, {{0.0, -1.0}}), DomainError);
    // Poles of Gamma(s) and Gamma(-s) touch at zero: no separating contour.
    CHECK_THROWS_AS(FoxHParams(1, 1, {{1.0, 1.0}}, {{0.0, 1.0}}), DomainError);
    // a* = 0: rejected by the convergence screen.
    const FoxHParams flat(0, 1, {{0.5, 1.0}}, {{0.0, 1.0}});
    CHECK(flat.a_star() == 0.0);
    CHECK_THROWS_AS(fox_h(flat, 1.0), DomainError);
    const FoxHParams e(1, 0, {}, {{0.0, 1.0}});
    CHECK_THROWS_AS(fox_h(e, 0.0), DomainError);
    CHECK_THROWS_AS(fox_h(e, -1.0), DomainError);
    CHECK_THROWS_AS(fox_h_eval(e, 1.0, {.abscissa = -0.5}), PoleError);
    // Strip bound -(4/3)/(2/3) rounds just below -2; -2 itself is a pole.
    const FoxHParams h(1, 1, {{-1.0, 1.0}}, {{4.0 / 3.0, 2.0 / 3.0}});
    CHECK_THROWS_AS(fox_h_eval(h, 0.5, {.abscissa = -2.0}), PoleError);
    CHECK_THROWS_AS(fox_h_eval(h, 0.5, {.abscissa = 2.0}), PoleError);
    CHECK_NOTHROW(fox_h_eval(h, 0.5, {.abscissa = -1.999}));
}
