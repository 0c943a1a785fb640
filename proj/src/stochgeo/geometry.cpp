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

#include "stochgeo/geometry.hpp"

#include "common/error.hpp"
#include "specfun/gamma.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace secrecy::stochgeo {

namespace {

void require_positive(double v, const char* name)
{
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw DomainError(std::string(name) + " must be positive and finite, got " + std::to_string(v));
    }
}

} // namespace

std::string_view to_string(Side s)
{
    return s == Side::legitimate ? "legitimate" : "eavesdropper";
}

double unit_ball_volume(int d)
{
    if (d < 1) throw DomainError("dimension must be >= 1, got " + std::to_string(d));
    return std::exp(0.5 * d * std::log(std::numbers::pi) - std::lgamma(1.0 + 0.5 * d));
}

NetworkGeometry::NetworkGeometry(int d, double upsilon, double lambda_b, double lambda_e,
                                 const fading::AlphaMuParams& fading_b,
                                 const fading::AlphaMuParams& fading_e)
    : d_(d)
    , upsilon_(upsilon)
    , lambda_b_(lambda_b)
    , lambda_e_(lambda_e)
    , fading_b_(fading_b)
    , fading_e_(fading_e)
{
    require_positive(upsilon, "path-loss exponent upsilon");
    require_positive(lambda_b, "lambda_b");
    require_positive(lambda_e, "lambda_e");
    c_d_ = unit_ball_volume(d);
    delta_ = d / upsilon;
    a_k_ = lambda_b * c_d_;
    a_e_ = lambda_e * c_d_;
    a_b0_ = a_k_ * delta_ * fading::moment_power_gain(fading_b, delta_);
    a_e0_ = a_e_ * delta_ * fading::moment_power_gain(fading_e, delta_);
    a_b1_ = a_b0_ / delta_;
    a_e1_ = a_e0_ / delta_;
}

PointSet sample_hppp(double density, int d, double radius, montecarlo::RandomStream& rng)
{
    require_positive(density, "density");
    require_positive(radius, "radius");
    const double scale = density * unit_ball_volume(d);
    const double limit = scale * std::pow(radius, d);
    PointSet out;
    out.d = d;
    std::vector<double> dir(d);
    for (double v = rng.exponential(); v <= limit; v += rng.exponential()) {
        const double r = std::pow(v / scale, 1.0 / d);
        double norm2 = 0.0;
        for (auto& c : dir) {
            c = rng.normal();
            norm2 += c * c;
        }
        const double inv = r / std::sqrt(norm2);
        for (double c : dir) out.coords.push_back(c * inv);
        out.radii.push_back(r);
    }
    return out;
}

std::vector<double> sample_hppp_radii(double density, int d, double radius,
                                      montecarlo::RandomStream& rng)
{
    require_positive(density, "density");
    require_positive(radius, "radius");
    const double scale = density * unit_ball_volume(d);
    const double limit = scale * std::pow(radius, d);
    std::vector<double> radii;
    for (double v = rng.exponential(); v <= limit; v += rng.exponential()) {
        radii.push_back(std::pow(v / scale, 1.0 / d));
    }
    return radii;
}

double pdf_kth_distance_pow(int k, double a, double delta, double y)
{
    if (k < 1) throw DomainError("order k must be >= 1");
    if (!(y > 0.0)) throw DomainError("pdf_kth_distance_pow requires y > 0");
    const double t = a * std::pow(y, delta);
    return std::exp(k * std::log(t) - t - std::lgamma(k)) * delta / y;
}

double cdf_kth_distance_pow(int k, double a, double delta, double y)
{
    if (k < 1) throw DomainError("order k must be >= 1");
    if (!(y >= 0.0)) throw DomainError("cdf_kth_distance_pow requires y >= 0");
    if (y == 0.0) return 0.0;
    return specfun::gamma_p(k, a * std::pow(y, delta));
}

double intensity_pathloss_fading(const NetworkGeometry& g, Side side, double x)
{
    if (!(x > 0.0)) throw DomainError("intensity requires x > 0");
    return g.a_intensity(side) * std::pow(x, g.delta() - 1.0);
}

double mean_measure_pathloss_fading(const NetworkGeometry& g, Side side, double x)
{
    if (!(x >= 0.0)) throw DomainError("mean measure requires x >= 0");
    return g.a_measure(side) * std::pow(x, g.delta());
}

std::vector<double> ordered_path_gains(const std::vector<double>& radii,
                                       const std::vector<double>& gains, double upsilon)
{
    if (radii.size() != gains.size()) throw DomainError("one fading draw per point is required");
    std::vector<double> xi(radii.size());
    for (std::size_t i = 0; i < radii.size(); ++i) xi[i] = std::pow(radii[i], upsilon) / gains[i];
    std::sort(xi.begin(), xi.end());
    return xi;
}

double cdf_kth_best(int k, double a1, double delta, double x)
{
    return cdf_kth_distance_pow(k, a1, delta, x);
}

double pdf_kth_best(int k, double a1, double delta, double x)
{
    return pdf_kth_distance_pow(k, a1, delta, x);
}

} // namespace secrecy::stochgeo
