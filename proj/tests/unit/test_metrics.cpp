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
#include "metrics/secrecy_metrics.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <numbers>

using namespace secrecy;
using namespace secrecy::metrics;
using fading::AlphaMuParams;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double db(double x) { return std::pow(10.0, x / 10.0); }

// E[h(G)] for G ~ Gamma(shape, 1), by tanh-sinh on (0, inf).
template <typename F>
double gamma_expect(double shape, F h)
{
    boost::math::quadrature::tanh_sinh<double> ts(12);
    auto w = [&](double g) {
        if (g <= 0.0) return 0.0;
        const double lw = (shape - 1.0) * std::log(g) - g - std::lgamma(shape);
        return lw < -745.0 ? 0.0 : h(g) * std::exp(lw);
    };
    return ts.integrate(w, 0.0, shape, 1e-13) + ts.integrate(w, shape, kInf, 1e-13);
}

double gain_of(const AlphaMuParams& f, double g) { return f.omega() * std::pow(g, 2.0 / f.alpha()); }

// P(y_k < c y_e) for independent A_k y_k^delta ~ Gamma(k), A_e y_e^delta ~ Exp(1):
// (beta / (1 + beta))^k with beta = (A_k / A_e) c^delta.
double order_race(int k, double a_k, double a_e, double delta, double c)
{
    const double beta = a_k / a_e * std::pow(c, delta);
    return std::pow(beta / (1.0 + beta), k);
}

// Oracles written from the model (Z = g / r^upsilon with r^upsilon following
// the k-th nearest law), independent of any Fox H evaluation.
double oracle_cdf_nearest(const AlphaMuParams& f, double a, double delta, int k, double z)
{
    return gamma_expect(f.mu(), [&](double g) {
        return boost::math::gamma_q(double(k), a * std::pow(gain_of(f, g) / z, delta));
    });
}

double oracle_pdf_nearest(const AlphaMuParams& f, double a, double delta, int k, double z)
{
    return gamma_expect(f.mu(), [&](double g) {
        const double t = a * std::pow(gain_of(f, g) / z, delta);
        return boost::math::gamma_p_derivative(double(k), t) * delta * t / z;
    });
}

// log2(1 + e^l) without overflow.
double log2_1p_exp(double l)
{
    return (l > 30.0 ? l + std::log1p(std::exp(-l)) : std::log1p(std::exp(l))) / std::numbers::ln2;
}

double oracle_capacity_nearest(const AlphaMuParams& f, double a, double delta, int k, double eta)
{
    return gamma_expect(f.mu(), [&](double g) {
        const double gain = gain_of(f, g);
        return gamma_expect(k, [&](double u) {
            return log2_1p_exp(std::log(eta * gain) + (std::log(a) - std::log(u)) / delta);
        });
    });
}

double oracle_capacity_best(double a1, double delta, int k, double eta)
{
    return gamma_expect(k, [&](double u) { return log2_1p_exp(std::log(eta) + (std::log(a1) - std::log(u)) / delta); });
}

ScenarioInputs fig6_inputs()
{
    ScenarioInputs in;
    in.lambda_b = 0.2;
    in.lambda_e = 0.1;
    in.n_a = 2;
    in.n_b = 1;
    in.n_e = 2;
    in.link_b = AlphaMuParams::canonical(2.0, 1.0);
    in.link_e = AlphaMuParams::canonical(2.0, 4.0);
    in.eta_k = in.eta_e = 1.0;
    return in;
}

} // namespace

TEST_CASE("scenario: derived quantities")
{
    ScenarioInputs in;
    in.eta_k = db(15.0);
    in.eta_e = db(0.0);
    in.rate = 2.0;
    const ScenarioConfig c(in);
    CHECK(c.varpi() * c.eta_e() == doctest::Approx(c.eta_k()).epsilon(1e-15));
    CHECK(c.threshold() == doctest::Approx(3.0 / in.eta_k).epsilon(1e-15));
    in.rate = 0.0;
    CHECK(ScenarioConfig(in).threshold() == 0.0);
    in.k = 0;
    CHECK_THROWS_AS(ScenarioConfig{in}, DomainError);
    in.k = 1;
    in.eta_e = 0.0;
    CHECK_THROWS_AS(ScenarioConfig{in}, DomainError);
    in.eta_e = 1.0;
    in.n_b = 0;
    CHECK_THROWS_AS(ScenarioConfig{in}, DomainError);
    CHECK(parse_case("BN") == Case::BN);
    CHECK(case_of(Ordering::nearest, Ordering::best) == Case::NB);
    CHECK_THROWS_AS(parse_ordering("closest"), DomainError);
}

TEST_CASE("composite gain, nearest: ratio-density example")
{
    // Exponential gain over exponential r^upsilon: f(z) = A / (A + z)^2.
    const AlphaMuParams f(2.0, 1.0, 1.0);
    CHECK(formula::pdf_composite_nearest(f, 1.0, 1.0, 1, 1.0) == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(formula::cdf_composite_nearest(f, 1.0, 1.0, 1, 1.0) == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(formula::cdf_composite_nearest(f, 1.0, 1.0, 1, 0.0) == 0.0);
    CHECK(formula::pdf_composite_nearest(f, 1.0, 1.0, 1, 1e6) < 1e-11);
}

TEST_CASE("composite gain, nearest: normalization and oracles")
{
    boost::math::quadrature::tanh_sinh<double> ts(10);
    ScenarioInputs in;
    in.lambda_b = 2.0;
    in.link_b = AlphaMuParams::canonical(2.0, 3.0);
    for (int k : {1, 2, 3}) {
        in.k = k;
        const ScenarioConfig c(in);
        auto pdf = [&](double z) { return z <= 0.0 ? 0.0 : pdf_composite_nearest(c, z); };
        const double total = ts.integrate(pdf, 0.0, 1.0, 1e-9) + ts.integrate(pdf, 1.0, kInf, 1e-9);
        CHECK_MESSAGE(std::abs(total - 1.0) <= 1e-6, "k=" << k);
        for (int i = 1; i <= 10; ++i) {
            const double z = 0.05 * i * i;
            const double running = ts.integrate(pdf, 0.0, z, 1e-10);
            CHECK_MESSAGE(std::abs(cdf_composite_nearest(c, z) - running) <= 1e-6, "k=" << k << " z=" << z);
        }
    }
    for (double alpha : {1.5, 2.0, 3.0}) {
        for (double mu : {0.7, 2.0}) {
            const auto f = AlphaMuParams::canonical(alpha, mu);
            for (int k : {1, 3}) {
                for (double delta : {0.5, 1.0}) {
                    for (double z : {0.05, 0.6, 3.0}) {
                        const double a = 0.8;
                        CHECK_MESSAGE(std::abs(formula::cdf_composite_nearest(f, a, delta, k, z) -
                                               oracle_cdf_nearest(f, a, delta, k, z)) <= 1e-7,
                                      "alpha=" << alpha << " mu=" << mu << " k=" << k << " delta=" << delta << " z=" << z);
                        const double pr = oracle_pdf_nearest(f, a, delta, k, z);
                        CHECK_MESSAGE(std::abs(formula::pdf_composite_nearest(f, a, delta, k, z) - pr) <=
                                          1e-7 * std::max(1.0, pr),
                                      "alpha=" << alpha << " mu=" << mu << " k=" << k << " delta=" << delta << " z=" << z);
                    }
                }
            }
        }
    }
}

TEST_CASE("composite gain, best")
{
    CHECK(formula::cdf_composite_best(1.0, 1.0, 1, 1.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
    CHECK(formula::cdf_composite_best(1.0, 1.0, 3, 1e12) == doctest::Approx(1.0));
    CHECK(formula::cdf_composite_best(1.0, 1.0, 3, 0.0) == 0.0);
    boost::math::quadrature::tanh_sinh<double> ts;
    auto pdf = [](double z) { return z <= 0.0 ? 0.0 : formula::pdf_composite_best(2.0, 0.5, 3, z); };
    const double total = ts.integrate(pdf, 0.0, 1.0) + ts.integrate(pdf, 1.0, kInf);
    CHECK(std::abs(total - 1.0) <= 1e-8);
    CHECK(ts.integrate(pdf, 0.0, 2.5) == doctest::Approx(formula::cdf_composite_best(2.0, 0.5, 3, 2.5)).epsilon(1e-10));
}

TEST_CASE("connection outage")
{
    ScenarioInputs in;
    in.rate = 0.0;
    CHECK(cop_nearest(ScenarioConfig(in)) == 0.0);
    CHECK(cop_best(ScenarioConfig(in)) == 0.0);

    // Monotone in rate and in k.
    in.link_b = AlphaMuParams::canonical(2.0, 3.0);
    in.eta_k = db(5.0);
    for (Ordering o : {Ordering::nearest, Ordering::best}) {
        in.ordering = o;
        double prev_rate = -1.0;
        for (double rate : {0.25, 0.5, 1.0, 2.0, 4.0}) {
            in.rate = rate;
            double prev_k = -1.0;
            for (int k = 1; k <= 6; ++k) {
                in.k = k;
                const double p = cop(ScenarioConfig(in));
                CHECK(p >= 0.0);
                CHECK(p <= 1.0);
                CHECK(p >= prev_k - 1e-12);
                prev_k = p;
                if (k == 1) {
                    CHECK(p >= prev_rate - 1e-12);
                    prev_rate = p;
                }
            }
        }
    }

    // The strongest user never outages more than the nearest one.
    ScenarioInputs f4;
    f4.upsilon = 4.0;
    f4.link_b = AlphaMuParams::canonical(2.0, 3.0);
    f4.eta_k = 1.0;
    f4.rate = 1.0;
    f4.k = 1;
    for (double lb : {0.1, 0.5, 1.0, 2.0, 5.0}) {
        f4.lambda_b = lb;
        const ScenarioConfig c(f4);
        CHECK(cop_best(c) <= cop_nearest(c) + 1e-12);
    }
}

TEST_CASE("non-zero secrecy: closed forms against model oracles")
{
    for (double alpha_k : {2.0, 3.0}) {
        for (double mu_k : {1.0, 2.5}) {
            for (double mu_e : {0.8, 4.0}) {
                for (double delta : {0.75, 1.0}) {
                    for (double varpi : {0.3, 1.0, 10.0}) {
                        const auto fk = AlphaMuParams::canonical(alpha_k, mu_k);
                        const auto fe = AlphaMuParams(2.0, mu_e, 1.7);
                        const double a_k = 0.2 * std::numbers::pi, a_e = 0.1 * std::numbers::pi;
                        const double a_b1 = a_k * fading::moment_power_gain(fk, delta);
                        const double a_e1 = a_e * fading::moment_power_gain(fe, delta);
                        for (int k : {1, 4}) {
                            INFO("alpha_k=" << alpha_k << " mu_k=" << mu_k << " mu_e=" << mu_e
                                 << " delta=" << delta << " varpi=" << varpi << " k=" << k);
                            const double nn = gamma_expect(mu_k, [&](double gk) {
                                return gamma_expect(mu_e, [&](double ge) {
                                    return order_race(k, a_k, a_e, delta, varpi * gain_of(fk, gk) / gain_of(fe, ge));
                                });
                            });
                            CHECK(std::abs(formula::pnz_nn(fk, fe, a_k, a_e, delta, varpi, k) - nn) <= 1e-7);
                            const double nb = gamma_expect(mu_k, [&](double gk) {
                                return order_race(k, a_k, a_e1, delta, varpi * gain_of(fk, gk));
                            });
                            CHECK(std::abs(formula::pnz_nb(fk, a_k, a_e1, delta, varpi, k) - nb) <= 1e-7);
                            const double bn = gamma_expect(mu_e, [&](double ge) {
                                return order_race(k, a_b1, a_e, delta, varpi / gain_of(fe, ge));
                            });
                            CHECK(std::abs(formula::pnz_bn(fe, a_e, a_b1, delta, varpi, k) - bn) <= 1e-7);
                            CHECK(formula::pnz_bb(a_b1, a_e1, delta, varpi, k) ==
                                  doctest::Approx(order_race(k, a_b1, a_e1, delta, varpi)).epsilon(1e-13));
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("non-zero secrecy: limits, ordering and exact values")
{
    CHECK(formula::pnz_bb(2.0, 1.0, 1.0, 1.0, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    ScenarioInputs sym;
    sym.link_b = sym.link_e = AlphaMuParams::canonical(3.0, 2.0);
    for (int k = 1; k <= 6; ++k) {
        sym.k = k;
        CHECK(pnz_bb(ScenarioConfig(sym)) == doctest::Approx(std::pow(0.5, k)).epsilon(1e-15));
    }

    ScenarioInputs in = fig6_inputs();
    in.k = 4;
    const ScenarioConfig c(in);
    const double nn = pnz_nn(c), nb = pnz_nb(c), bn = pnz_bn(c), bb = pnz_bb(c);
    CHECK(nn > nb);
    CHECK(nb > bn);
    CHECK(bn > bb);

    in.eta_k = 1e8;
    const ScenarioConfig strong(in);
    CHECK(pnz_nn(strong) == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(pnz_nb(strong) == doctest::Approx(1.0).epsilon(1e-3));
    in.eta_k = 1e-8;
    CHECK(pnz_bn(ScenarioConfig(in)) <= 1e-3);

    // pnz_bb: decreasing in k, increasing in varpi.
    in = fig6_inputs();
    double prev_k = 2.0;
    for (int k = 1; k <= 8; ++k) {
        in.k = k;
        double prev_w = -1.0;
        for (double w : {0.1, 0.5, 1.0, 3.0, 10.0}) {
            in.eta_k = w;
            const double v = pnz_bb(ScenarioConfig(in));
            CHECK(v > prev_w);
            prev_w = v;
        }
        in.eta_k = 1.0;
        const double v = pnz_bb(ScenarioConfig(in));
        CHECK(v < prev_k);
        prev_k = v;
    }
}

TEST_CASE("maximum secure best users")
{
    CHECK(formula::max_secure_best_users(0.5, 0.25) == 2);
    CHECK(formula::max_secure_best_users(0.5, 0.3) == 1);
    CHECK(formula::max_secure_best_users(0.5, 0.6) == 0);
    CHECK(formula::max_secure_best_users(0.5, 0.125) == 3);
    CHECK_THROWS_AS(formula::max_secure_best_users(0.5, 1.0), DomainError);
    CHECK_THROWS_AS(formula::max_secure_best_users(0.5, 0.0), DomainError);

    ScenarioInputs in;
    in.link_b = AlphaMuParams::canonical(3.0, 2.0);
    in.link_e = AlphaMuParams::canonical(2.0, 3.0);
    for (double ratio : {1.0, 2.0, 5.0}) {
        in.lambda_b = ratio;
        for (double w : {0.5, 1.0, 4.0, 10.0}) {
            in.eta_k = w;
            for (int k = 1; k <= 8; ++k) {
                in.k = k;
                const ScenarioConfig c(in);
                // pnz_bb(k) is itself an admissible threshold for k users.
                CHECK(max_secure_best_users(c, pnz_bb(c)) >= k);
                CHECK(max_secure_best_users(c, pnz_bb(c)) == k);
            }
        }
    }
    // Non-decreasing in varpi and in the density ratio.
    in.k = 1;
    for (double tau : {0.01, 0.1}) {
        int prev = -1;
        for (double w : {0.1, 1.0, 10.0, 100.0}) {
            in.eta_k = w;
            const int v = max_secure_best_users(ScenarioConfig(in), tau);
            CHECK(v >= prev);
            prev = v;
        }
        in.eta_k = 1.0;
        prev = -1;
        for (double lb : {0.5, 1.0, 4.0, 16.0}) {
            in.lambda_b = lb;
            const int v = max_secure_best_users(ScenarioConfig(in), tau);
            CHECK(v >= prev);
            prev = v;
        }
    }
}

TEST_CASE("ergodic capacities against quadrature")
{
    for (double alpha : {2.0, 3.0}) {
        for (double mu : {1.0, 2.5}) {
            const auto f = AlphaMuParams::canonical(alpha, mu);
            for (double delta : {0.5, 1.0}) {
                for (int k : {1, 3}) {
                    for (double eta : {0.5, db(15.0)}) {
                        INFO("alpha=" << alpha << " mu=" << mu << " delta=" << delta << " k=" << k << " eta=" << eta);
                        const double a = std::numbers::pi;
                        const double ref = oracle_capacity_nearest(f, a, delta, k, eta);
                        CHECK(std::abs(formula::capacity_nearest(f, a, delta, k, eta) - ref) <= 1e-6 * std::max(1.0, ref));
                        const double a1 = a * fading::moment_power_gain(f, delta);
                        const double refb = oracle_capacity_best(a1, delta, k, eta);
                        CHECK(std::abs(formula::capacity_best(a1, delta, k, eta) - refb) <= 1e-6 * std::max(1.0, refb));
                    }
                }
            }
        }
    }
    CHECK(formula::capacity_nearest(AlphaMuParams(2.0, 1.0, 1.0), 1.0, 1.0, 1, 0.0) == 0.0);
    CHECK(formula::capacity_best(1.0, 1.0, 1, 0.0) == 0.0);
    CHECK(formula::capacity_best(1.0, 1.0, 1, 1e-12) < 1e-9);
}

TEST_CASE("ergodic secrecy capacity")
{
    ScenarioInputs in;
    in.lambda_b = in.lambda_e = 1.0;
    in.eta_k = in.eta_e = db(3.0);
    for (Case c : {Case::NN, Case::BB}) CHECK(ergodic_secrecy_capacity(ScenarioConfig(in), c) == 0.0);

    in.eta_k = db(15.0);
    in.eta_e = db(0.0);
    for (int k = 1; k <= 6; ++k) {
        in.k = k;
        const ScenarioConfig c(in);
        const double nn = ergodic_secrecy_capacity(c, Case::NN);
        const double nb = ergodic_secrecy_capacity(c, Case::NB);
        const double bn = ergodic_secrecy_capacity(c, Case::BN);
        const double bb = ergodic_secrecy_capacity(c, Case::BB);
        CHECK(nn >= 0.0);
        CHECK(nb >= 0.0);
        CHECK(bb >= 0.0);
        CHECK(bn >= std::max({nn, nb, bb}));
        CHECK(nn == doctest::Approx(std::max(ergodic_capacity_nearest(c) - wiretap_capacity_nearest(c), 0.0)));
    }
}
