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

#include "metrics/scenario.hpp"

#include "common/error.hpp"

#include <cmath>
#include <sstream>

namespace secrecy::metrics {

namespace {

stochgeo::NetworkGeometry build_geometry(const ScenarioInputs& in)
{
    if (in.n_a < 1 || in.n_b < 1 || in.n_e < 1) {
        throw DomainError("antenna counts must be >= 1");
    }
    return stochgeo::NetworkGeometry(in.d, in.upsilon, in.lambda_b, in.lambda_e,
                                     fading::fit_sum_params(in.link_b, in.n_a * in.n_b),
                                     fading::fit_sum_params(in.link_e, in.n_a * in.n_e));
}

} // namespace

std::string_view to_string(Ordering o)
{
    return o == Ordering::nearest ? "nearest" : "best";
}

std::string_view to_string(Case c)
{
    switch (c) {
    case Case::NN: return "NN";
    case Case::NB: return "NB";
    case Case::BN: return "BN";
    case Case::BB: return "BB";
    }
    return "?";
}

Ordering parse_ordering(std::string_view s)
{
    if (s == "nearest") return Ordering::nearest;
    if (s == "best") return Ordering::best;
    throw DomainError("unknown ordering '" + std::string(s) + "' (expected nearest or best)");
}

Case parse_case(std::string_view s)
{
    for (Case c : {Case::NN, Case::NB, Case::BN, Case::BB}) {
        if (s == to_string(c)) return c;
    }
    throw DomainError("unknown case '" + std::string(s) + "' (expected NN, NB, BN or BB)");
}

Case case_of(Ordering legitimate, Ordering eavesdropper)
{
    if (legitimate == Ordering::nearest) return eavesdropper == Ordering::nearest ? Case::NN : Case::NB;
    return eavesdropper == Ordering::nearest ? Case::BN : Case::BB;
}

Ordering legitimate_ordering(Case c)
{
    return (c == Case::NN || c == Case::NB) ? Ordering::nearest : Ordering::best;
}

Ordering eavesdropper_ordering(Case c)
{
    return (c == Case::NN || c == Case::BN) ? Ordering::nearest : Ordering::best;
}

ScenarioConfig::ScenarioConfig(const ScenarioInputs& in)
    : ScenarioConfig(in, build_geometry(in))
{
}

ScenarioConfig::ScenarioConfig(const ScenarioInputs& in, const stochgeo::NetworkGeometry& geometry)
    : in_(in)
    , geometry_(geometry)
{
    if (!(in.eta_k > 0.0) || !std::isfinite(in.eta_k)) throw DomainError("eta_k must be positive and finite");
    if (!(in.eta_e > 0.0) || !std::isfinite(in.eta_e)) throw DomainError("eta_e must be positive and finite");
    if (!(in.rate >= 0.0) || !std::isfinite(in.rate)) throw DomainError("rate must be non-negative and finite");
    if (in.k < 1) throw DomainError("user index k must be >= 1, got " + std::to_string(in.k));
    varpi_ = in.eta_k / in.eta_e;
    threshold_ = std::expm1(in.rate * std::log(2.0)) / in.eta_k;
}

ScenarioConfig ScenarioConfig::with_k(int k) const
{
    ScenarioInputs in = in_;
    in.k = k;
    return ScenarioConfig(in, geometry_);
}

std::string ScenarioConfig::describe() const
{
    std::ostringstream os;
    os.precision(12);
    os << "d=" << in_.d << " upsilon=" << in_.upsilon << " lambda_b=" << in_.lambda_b
       << " lambda_e=" << in_.lambda_e << " fading_b=" << fading::to_string(fading_b())
       << " fading_e=" << fading::to_string(fading_e()) << " eta_k=" << in_.eta_k
       << " eta_e=" << in_.eta_e << " rate=" << in_.rate << " k=" << in_.k;
    return os.str();
}

} // namespace secrecy::metrics
