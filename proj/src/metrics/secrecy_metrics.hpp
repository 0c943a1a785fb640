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

#pragma once

#include "metrics/scenario.hpp"
#include "specfun/fox_h.hpp"

#include <string>
#include <vector>

namespace secrecy::metrics {

// Closed forms in explicit parameters. `a` is the nearest-ordering
// constant (lambda c_d), `a1` the mean-measure constant of the
// path-loss-with-fading process, `delta` = d / upsilon.
namespace formula {

/// A Fox H-function instance together with the argument a closed form
/// evaluates it at.
struct FoxKernel {
    specfun::FoxHParams params;
    double z;
};

FoxKernel pdf_nearest_kernel(const fading::AlphaMuParams& f, double a, double delta, int k, double z);
FoxKernel cdf_nearest_tail_kernel(const fading::AlphaMuParams& f, double a, double delta, int k, double z);
FoxKernel cdf_nearest_lower_kernel(const fading::AlphaMuParams& f, double a, double delta, int k, double z);
FoxKernel pnz_nn_kernel(const fading::AlphaMuParams& fk, const fading::AlphaMuParams& fe, double a_k, double a_e,
                        double delta, double varpi, int k);
FoxKernel pnz_nb_kernel(const fading::AlphaMuParams& fk, double a_k, double a_e1, double delta, double varpi, int k);
FoxKernel pnz_bn_kernel(const fading::AlphaMuParams& fe, double a_e, double a_b1, double delta, double varpi, int k);
FoxKernel capacity_nearest_kernel(const fading::AlphaMuParams& f, double a, double delta, int k, double eta);
FoxKernel capacity_best_kernel(double a1, double delta, int k, double eta);


double pdf_composite_nearest(const fading::AlphaMuParams& f, double a, double delta, int k, double z);
double cdf_composite_nearest(const fading::AlphaMuParams& f, double a, double delta, int k, double z);
double pdf_composite_best(double a1, double delta, int k, double z);
double cdf_composite_best(double a1, double delta, int k, double z);

double pnz_nn(const fading::AlphaMuParams& fk, const fading::AlphaMuParams& fe, double a_k,
              double a_e, double delta, double varpi, int k);
double pnz_nb(const fading::AlphaMuParams& fk, double a_k, double a_e1, double delta, double varpi, int k);
double pnz_bn(const fading::AlphaMuParams& fe, double a_e, double a_b1, double delta, double varpi, int k);
double pnz_bb(double a_b1, double a_e1, double delta, double varpi, int k);

/// b = a_b1 / (a_b1 + a_e1 varpi^-delta), the one-user secrecy probability
/// of the best/best pairing.
double best_user_base(double a_b1, double a_e1, double delta, double varpi);
/// Largest k with b^k >= tau (0 when even k = 1 fails).
int max_secure_best_users(double base, double tau);

/// E[log2(1 + eta Z)] for the k-th nearest / k-th best composite gain.
double capacity_nearest(const fading::AlphaMuParams& f, double a, double delta, int k, double eta);
double capacity_best(double a1, double delta, int k, double eta);

} // namespace formula

double pdf_composite_nearest(const ScenarioConfig& cfg, double z);
double cdf_composite_nearest(const ScenarioConfig& cfg, double z);
double pdf_composite_best(const ScenarioConfig& cfg, double z);
double cdf_composite_best(const ScenarioConfig& cfg, double z);

double cop_nearest(const ScenarioConfig& cfg);
double cop_best(const ScenarioConfig& cfg);
/// Dispatches on cfg.ordering().
double cop(const ScenarioConfig& cfg);

double pnz_nn(const ScenarioConfig& cfg);
double pnz_nb(const ScenarioConfig& cfg);
double pnz_bn(const ScenarioConfig& cfg);
double pnz_bb(const ScenarioConfig& cfg);
double pnz(const ScenarioConfig& cfg, Case c);

/// Throws DomainError unless 0 < tau < 1.
int max_secure_best_users(const ScenarioConfig& cfg, double tau);

/// Main-channel ergodic capacity of the k-th nearest / best user.
double ergodic_capacity_nearest(const ScenarioConfig& cfg);
double ergodic_capacity_best(const ScenarioConfig& cfg);
/// Wiretap capacity of the first nearest / best eavesdropper.
double wiretap_capacity_nearest(const ScenarioConfig& cfg);
double wiretap_capacity_best(const ScenarioConfig& cfg);
/// [R_main - R_wiretap]^+ for the given pairing.
double ergodic_secrecy_capacity(const ScenarioConfig& cfg, Case c);

struct NamedKernel {
    std::string name;
    formula::FoxKernel kernel;
};

/// Every Fox H instance the closed forms evaluate for cfg at its k; the
/// composite-gain kernels are taken at argument z.
std::vector<NamedKernel> fox_h_kernels(const ScenarioConfig& cfg, double z);

} // namespace secrecy::metrics
