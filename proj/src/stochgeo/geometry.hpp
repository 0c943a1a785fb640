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
#include "montecarlo/random_stream.hpp"

#include <string_view>
#include <vector>

namespace secrecy::stochgeo {

enum class Side { legitimate, eavesdropper };

std::string_view to_string(Side s);

/// Network geometry plus the constants the closed forms are written in.
///
/// a_k = lambda_b c_d is the mean number of legitimate points per unit of
/// r^d, so the k-th nearest law reads in terms of r^upsilon with exponent
/// delta = d / upsilon. a_b0 and a_b1 fold the fading moment of order delta
/// into the intensity of the path-loss-with-fading process.
class NetworkGeometry {
public:
    NetworkGeometry(int d, double upsilon, double lambda_b, double lambda_e,
                    const fading::AlphaMuParams& fading_b, const fading::AlphaMuParams& fading_e);

    int d() const noexcept { return d_; }
    double upsilon() const noexcept { return upsilon_; }
    double lambda_b() const noexcept { return lambda_b_; }
    double lambda_e() const noexcept { return lambda_e_; }
    double delta() const noexcept { return delta_; }
    double c_d() const noexcept { return c_d_; }
    const fading::AlphaMuParams& fading_b() const noexcept { return fading_b_; }
    const fading::AlphaMuParams& fading_e() const noexcept { return fading_e_; }

    double a_k() const noexcept { return a_k_; }
    double a_e() const noexcept { return a_e_; }
    double a_b0() const noexcept { return a_b0_; }
    double a_b1() const noexcept { return a_b1_; }
    double a_e0() const noexcept { return a_e0_; }
    double a_e1() const noexcept { return a_e1_; }

    double density(Side s) const noexcept { return s == Side::legitimate ? lambda_b_ : lambda_e_; }
    double a_nearest(Side s) const noexcept { return s == Side::legitimate ? a_k_ : a_e_; }
    double a_intensity(Side s) const noexcept { return s == Side::legitimate ? a_b0_ : a_e0_; }
    double a_measure(Side s) const noexcept { return s == Side::legitimate ? a_b1_ : a_e1_; }
    const fading::AlphaMuParams& fading(Side s) const noexcept
    {
        return s == Side::legitimate ? fading_b_ : fading_e_;
    }

private:
    int d_;
    double upsilon_, lambda_b_, lambda_e_;
    fading::AlphaMuParams fading_b_, fading_e_;
    double delta_, c_d_;
    double a_k_, a_e_, a_b0_, a_b1_, a_e0_, a_e1_;
};

/// Volume of the unit ball in d dimensions.
double unit_ball_volume(int d);

struct PointSet {
    int d = 0;
    /// Row-major coordinates, d per point, in order of increasing radius.
    std::vector<double> coords;
    std::vector<double> radii;

    std::size_t size() const noexcept { return radii.size(); }
};

/// Homogeneous PPP of the given density restricted to the ball of radius
/// `radius`. Points are generated outward in radius, one point (radius
/// then direction) at a time, so a larger ball extends the same draws.
PointSet sample_hppp(double density, int d, double radius, montecarlo::RandomStream& rng);

/// Radii only, same construction; consumes one exponential per point.
std::vector<double> sample_hppp_radii(double density, int d, double radius,
                                      montecarlo::RandomStream& rng);

/// Density of r_k^upsilon: exp(-A y^delta) delta (A y^delta)^k / (y Gamma(k)).
double pdf_kth_distance_pow(int k, double a, double delta, double y);
/// P(k, A y^delta).
double cdf_kth_distance_pow(int k, double a, double delta, double y);

/// Intensity A_0 x^(delta-1) of the path-loss-with-fading process.
double intensity_pathloss_fading(const NetworkGeometry& g, Side side, double x);
/// Mean measure A_1 x^delta of [0, x].
double mean_measure_pathloss_fading(const NetworkGeometry& g, Side side, double x);

/// xi_j = r_j^upsilon / g_j, sorted ascending. Sizes must agree.
std::vector<double> ordered_path_gains(const std::vector<double>& radii,
                                       const std::vector<double>& gains, double upsilon);

/// CDF and density of xi_k (k-th smallest path loss with fading), where
/// a1 is the mean-measure constant of the process.
double cdf_kth_best(int k, double a1, double delta, double x);
double pdf_kth_best(int k, double a1, double delta, double x);

} // namespace secrecy::stochgeo
