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

#include "fading/alpha_mu.hpp"
#include "stochgeo/geometry.hpp"

#include <string>
#include <string_view>

namespace secrecy::metrics {

enum class Ordering { nearest, best };

/// Receiver/eavesdropper pairing: first letter is the legitimate ordering,
/// second the eavesdropper's.
enum class Case { NN, NB, BN, BB };

std::string_view to_string(Ordering o);
std::string_view to_string(Case c);
/// Throws DomainError for unknown names.
Ordering parse_ordering(std::string_view s);
Case parse_case(std::string_view s);
Case case_of(Ordering legitimate, Ordering eavesdropper);
Ordering legitimate_ordering(Case c);
Ordering eavesdropper_ordering(Case c);

/// Raw scenario description. Link laws are per antenna pair; the summed
/// MIMO laws are derived from them.
struct ScenarioInputs {
    int d = 2;
    double upsilon = 2.0;
    double lambda_b = 1.0;
    double lambda_e = 1.0;
    fading::AlphaMuParams link_b = fading::AlphaMuParams::canonical(2.0, 1.0);
    fading::AlphaMuParams link_e = fading::AlphaMuParams::canonical(2.0, 1.0);
    int n_a = 1, n_b = 1, n_e = 1;
    double eta_k = 1.0;
    double eta_e = 1.0;
    double rate = 1.0;
    int k = 1;
    Ordering ordering = Ordering::nearest;
    Ordering eavesdropper_policy = Ordering::nearest;
};

class ScenarioConfig {
public:
    /// Validates and derives everything; throws DomainError on bad inputs
    /// and ConvergenceError if a summed fading law cannot be fitted.
    explicit ScenarioConfig(const ScenarioInputs& in);

    const ScenarioInputs& inputs() const noexcept { return in_; }
    const stochgeo::NetworkGeometry& geometry() const noexcept { return geometry_; }
    /// Summed-gain laws over n_a n_b and n_a n_e branches.
    const fading::AlphaMuParams& fading_b() const noexcept { return geometry_.fading_b(); }
    const fading::AlphaMuParams& fading_e() const noexcept { return geometry_.fading_e(); }

    double eta_k() const noexcept { return in_.eta_k; }
    double eta_e() const noexcept { return in_.eta_e; }
    /// eta_k / eta_e
    double varpi() const noexcept { return varpi_; }
    double rate() const noexcept { return in_.rate; }
    /// SNR threshold (2^rate - 1) / eta_k.
    double threshold() const noexcept { return threshold_; }
    int k() const noexcept { return in_.k; }
    Ordering ordering() const noexcept { return in_.ordering; }
    Ordering eavesdropper_policy() const noexcept { return in_.eavesdropper_policy; }

    /// Copy with a different user index (no refit needed).
    ScenarioConfig with_k(int k) const;

    std::string describe() const;

private:
    ScenarioConfig(const ScenarioInputs& in, const stochgeo::NetworkGeometry& geometry);

    ScenarioInputs in_;
    stochgeo::NetworkGeometry geometry_;
    double varpi_ = 0.0;
    double threshold_ = 0.0;
};

} // namespace secrecy::metrics
