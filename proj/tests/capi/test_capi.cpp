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

// Exercises the shared library through its C header only.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "secrecy/secrecy.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>

namespace {

secrecy_scenario_params four_pairings()
{
    secrecy_scenario_params p;
    secrecy_scenario_params_default(&p);
    p.lambda_b = 0.2;
    p.lambda_e = 0.1;
    p.n_a = 2;
    p.n_e = 2;
    p.link_e.mu = 4.0;
    p.k = 2;
    return p;
}

struct Scenario {
    secrecy_scenario* h = nullptr;
    explicit Scenario(const secrecy_scenario_params& p) { REQUIRE(secrecy_scenario_create(&p, &h) == SECRECY_OK); }
    ~Scenario() { secrecy_scenario_destroy(h); }
};

} // namespace

TEST_CASE("defaults and metadata")
{
    secrecy_scenario_params p;
    secrecy_scenario_params_default(&p);
    CHECK(p.d == 2);
    CHECK(p.upsilon == 2.0);
    CHECK(p.k == 1);
    CHECK(p.ordering == SECRECY_NEAREST);
    secrecy_mc_config mc;
    secrecy_mc_config_default(&mc);
    CHECK(mc.trials == 1000000);
    CHECK(mc.ci_level == 0.997);
    CHECK(std::string(secrecy_version()).size() > 0);
    CHECK(std::string(secrecy_status_string(SECRECY_ERR_CONFIG)) == "config error");
}

TEST_CASE("closed form and quadrature agree through the API")
{
    Scenario s(four_pairings());
    for (int m = SECRECY_METRIC_COP; m <= SECRECY_METRIC_ERGODIC_SECRECY; ++m) {
        for (int c = SECRECY_CASE_NN; c <= SECRECY_CASE_BB; ++c) {
            secrecy_estimate closed{}, quad{};
            REQUIRE(secrecy_eval(s.h, secrecy_metric(m), secrecy_case(c), SECRECY_METHOD_CLOSED_FORM, nullptr, &closed) ==
                    SECRECY_OK);
            REQUIRE(secrecy_eval(s.h, secrecy_metric(m), secrecy_case(c), SECRECY_METHOD_QUADRATURE, nullptr, &quad) ==
                    SECRECY_OK);
            CHECK(closed.provenance == SECRECY_PROVENANCE_CLOSED_FORM);
            CHECK(quad.provenance == SECRECY_PROVENANCE_QUADRATURE);
            CHECK(quad.value == doctest::Approx(closed.value).epsilon(1e-6));
            CHECK(closed.half_width == 0.0);
        }
    }
    secrecy_alpha_mu fb{}, fe{};
    REQUIRE(secrecy_scenario_fading(s.h, &fb, &fe) == SECRECY_OK);
    CHECK(fb.alpha == doctest::Approx(2.0)); // Rayleigh sums stay Nakagami
    CHECK(fb.mu == doctest::Approx(2.0));
}

TEST_CASE("Monte Carlo through the API is deterministic and covers the closed form")
{
    Scenario s(four_pairings());
    secrecy_mc_config mc;
    secrecy_mc_config_default(&mc);
    mc.trials = 40000;
    mc.master_seed = 99;
    secrecy_estimate a{}, b{}, closed{};
    REQUIRE(secrecy_eval(s.h, SECRECY_METRIC_PNZ, SECRECY_CASE_NB, SECRECY_METHOD_MONTE_CARLO, &mc, &a) == SECRECY_OK);
    mc.workers = 4;
    REQUIRE(secrecy_eval(s.h, SECRECY_METRIC_PNZ, SECRECY_CASE_NB, SECRECY_METHOD_MONTE_CARLO, &mc, &b) == SECRECY_OK);
    CHECK(a.value == b.value);
    CHECK(a.half_width == b.half_width);
    CHECK(a.provenance == SECRECY_PROVENANCE_MONTE_CARLO);
    CHECK(a.trials_used + a.rejected == 40000);
    REQUIRE(secrecy_eval(s.h, SECRECY_METRIC_PNZ, SECRECY_CASE_NB, SECRECY_METHOD_CLOSED_FORM, nullptr, &closed) ==
            SECRECY_OK);
    CHECK(closed.value >= a.ci_low);
    CHECK(closed.value <= a.ci_high);

    secrecy_estimate diff{}, moc{};
    REQUIRE(secrecy_simulate_ergodic_secrecy(s.h, SECRECY_CASE_BN, &mc, &diff, &moc) == SECRECY_OK);
    CHECK(moc.value >= diff.value);
}

TEST_CASE("scalar helpers")
{
    Scenario s(four_pairings());
    double pdf = 0.0, cdf = 0.0;
    REQUIRE(secrecy_composite_pdf(s.h, SECRECY_BEST, 0.7, &pdf) == SECRECY_OK);
    REQUIRE(secrecy_composite_cdf(s.h, SECRECY_NEAREST, 0.7, &cdf) == SECRECY_OK);
    CHECK(pdf > 0.0);
    CHECK(cdf > 0.0);
    CHECK(cdf < 1.0);
    int k = -1;
    REQUIRE(secrecy_max_secure_best_users(s.h, 0.25, &k) == SECRECY_OK);
    CHECK(k >= 0);

    // H^{1,0}_{0,1}[z | -; (0, 1)] = exp(-z)
    const double b[] = {0.0}, B[] = {1.0};
    double h = 0.0;
    REQUIRE(secrecy_fox_h(1, 0, 0, nullptr, nullptr, 1, b, B, 2.5, &h) == SECRECY_OK);
    CHECK(h == doctest::Approx(std::exp(-2.5)).epsilon(1e-10));
}

TEST_CASE("errors map onto status codes")
{
    secrecy_scenario* h = nullptr;
    CHECK(secrecy_scenario_create(nullptr, &h) == SECRECY_ERR_INVALID_ARGUMENT);
    auto p = four_pairings();
    p.lambda_b = -1.0;
    CHECK(secrecy_scenario_create(&p, &h) == SECRECY_ERR_DOMAIN);
    CHECK(h == nullptr);
    CHECK(std::string(secrecy_last_error()).find("lambda") != std::string::npos);
    p = four_pairings();
    p.ordering = secrecy_ordering(7);
    CHECK(secrecy_scenario_create(&p, &h) == SECRECY_ERR_INVALID_ARGUMENT);

    Scenario s(four_pairings());
    secrecy_estimate e{};
    CHECK(secrecy_eval(s.h, SECRECY_METRIC_COP, SECRECY_CASE_NN, SECRECY_METHOD_MONTE_CARLO, nullptr, &e) ==
          SECRECY_ERR_INVALID_ARGUMENT);
    double out = 0.0;
    CHECK(secrecy_composite_pdf(s.h, SECRECY_BEST, -1.0, &out) == SECRECY_ERR_DOMAIN);
    const double b[] = {0.0, 0.0}, B[] = {1.0, 1.0};
    CHECK(secrecy_fox_h(1, 0, 0, nullptr, nullptr, 2, b, B, 1.0, &out) == SECRECY_ERR_DOMAIN); // a* = 0
    int k = 0;
    CHECK(secrecy_max_secure_best_users(s.h, 1.5, &k) == SECRECY_ERR_DOMAIN);

    // The last error is per thread.
    std::string other;
    std::thread t([&] { other = secrecy_last_error(); });
    t.join();
    CHECK(other.empty());
    CHECK(!std::string(secrecy_last_error()).empty());
    CHECK(secrecy_composite_pdf(s.h, SECRECY_BEST, 1.0, &out) == SECRECY_OK);
    CHECK(std::string(secrecy_last_error()).empty());
}

TEST_CASE("run documents")
{
    secrecy_run* run = nullptr;
    CHECK(secrecy_run_parse("[geometry]\nlambda_b = -1\n", &run) == SECRECY_ERR_CONFIG);
    CHECK(std::string(secrecy_last_error()).rfind("line 2:", 0) == 0);

    const char* doc = "[geometry]\nlambda_b = 0.2\nlambda_e = 0.1\n[scenario]\neta_k_db = 3\nk = 2\n"
                      "[run]\nmetric = pnz\ncase = BB\n";
    REQUIRE(secrecy_run_parse(doc, &run) == SECRECY_OK);
    const std::string path = "capi_run_output.csv";
    std::remove(path.c_str());
    CHECK(secrecy_run_set(run, "out", path.c_str()) == SECRECY_OK);
    CHECK(secrecy_run_set(run, "seed", "12") == SECRECY_OK);
    CHECK(secrecy_run_set(run, "seed", "twelve") == SECRECY_ERR_CONFIG);
    CHECK(secrecy_run_set(run, "colour", "red") == SECRECY_ERR_CONFIG);
    int code = -1;
    REQUIRE(secrecy_run_execute(run, &code) == SECRECY_OK);
    CHECK(code == 0);
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    // Density ratio 2, equal fading: (2 / 3)^2.
    CHECK(ss.str() == "metric,case,k,value,half_width,provenance\npnz,BB,2,0.444444444444,0,closed-form\n");

    CHECK(secrecy_run_set(run, "command", "figure") == SECRECY_OK);
    REQUIRE(secrecy_run_execute(run, &code) == SECRECY_OK);
    CHECK(code == 2); // no figure identifier
    CHECK(std::string(secrecy_last_error()).find("figure") != std::string::npos);
    secrecy_run_destroy(run);
    std::remove(path.c_str());
    std::remove((path + ".config.json").c_str());
}
