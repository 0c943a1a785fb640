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

#include "specfun/fox_h.hpp"

#include "common/error.hpp"
#include "specfun/gamma.hpp"
#include "specfun/quadrature.hpp"

#include <boost/math/tools/minima.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace secrecy::specfun {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool at_pole(cplx z)
{
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// log Theta(s). Returns false when a reciprocal gamma vanishes (the
// integrand is then exactly zero).
bool log_theta(const FoxHParams& h, cplx s, cplx& out)
{
    cplx acc = 0.0;
    const auto& up = h.upper();
    const auto& lo = h.lower();
    for (int j = 0; j < h.q(); ++j) {
        if (j < h.m()) {
            acc += log_gamma(lo[j].coeff + lo[j].scale * s);
        } else {
            const cplx arg = 1.0 - lo[j].coeff - lo[j].scale * s;
            if (at_pole(arg)) return false;
            acc -= log_gamma(arg);
        }
    }
    for (int j = 0; j < h.p(); ++j) {
        if (j < h.n()) {
            acc += log_gamma(1.0 - up[j].coeff - up[j].scale * s);
        } else {
            const cplx arg = up[j].coeff + up[j].scale * s;
            if (at_pole(arg)) return false;
            acc -= log_gamma(arg);
        }
    }
    out = acc;
    return true;
}

// Real part of log(Theta(c) z^-c) on the real axis: the height of the
// integrand at t = 0, a proxy for the contour's L1 norm.
double log_height(const FoxHParams& h, double c, double log_z)
{
    cplx l;
    if (!log_theta(h, cplx(c, 0.0), l)) return kInf;
    return l.real() - c * log_z;
}

// Abscissa minimizing log_height inside the strip, kept a small margin away
// from the bounding poles.
double saddle_abscissa(const FoxHParams& h, double log_z)
{
    const double lo = h.contour_lower(), hi = h.contour_upper();
    const bool flo = std::isfinite(lo), fhi = std::isfinite(hi);
    const double margin = (flo && fhi) ? std::min(0.02 * (hi - lo), 0.05) : 0.05;
    double a = flo ? lo + margin : h.default_abscissa() - 1.0;
    double b = fhi ? hi - margin : h.default_abscissa() + 1.0;
    auto f = [&](double c) { return log_height(h, c, log_z); };
    // Grow an open end while the height still falls towards it.
    for (int i = 0; !flo && i < 60 && f(a) < f(a + 1e-3); ++i) a -= (b - a);
    for (int i = 0; !fhi && i < 60 && f(b) < f(b - 1e-3); ++i) b += (b - a);
    return boost::math::tools::brent_find_minima(f, a, b, 40).first;
}

} // namespace

FoxHParams::FoxHParams(int m, int n, std::vector<FoxPair> upper, std::vector<FoxPair> lower)
    : m_(m)
    , n_(n)
    , upper_(std::move(upper))
    , lower_(std::move(lower))
    , lower_bound_(-kInf)
    , upper_bound_(kInf)
{
    if (m_ < 0 || n_ < 0 || m_ > q() || n_ > p()) {
        throw DomainError("Fox H orders must satisfy 0 <= m <= q and 0 <= n <= p: " + describe());
    }
    for (const auto& pr : upper_) {
        if (!(pr.scale > 0.0) || !std::isfinite(pr.coeff)) {
            throw DomainError("Fox H upper scale A_j must be positive: " + describe());
        }
    }
    for (const auto& pr : lower_) {
        if (!(pr.scale > 0.0) || !std::isfinite(pr.coeff)) {
            throw DomainError("Fox H lower scale B_j must be positive: " + describe());
        }
    }
    for (int j = 0; j < m_; ++j) {
        lower_bound_ = std::max(lower_bound_, -lower_[j].coeff / lower_[j].scale);
    }
    for (int j = 0; j < n_; ++j) {
        upper_bound_ = std::min(upper_bound_, (1.0 - upper_[j].coeff) / upper_[j].scale);
    }
    if (!(lower_bound_ < upper_bound_)) {
        throw DomainError("Fox H poles cannot be separated by a vertical contour (need " +
                          std::to_string(lower_bound_) + " < c < " + std::to_string(upper_bound_) +
                          "): " + describe());
    }
}

double FoxHParams::a_star() const noexcept
{
    double a = 0.0;
    for (int j = 0; j < p(); ++j) a += (j < n_ ? 1.0 : -1.0) * upper_[j].scale;
    for (int j = 0; j < q(); ++j) a += (j < m_ ? 1.0 : -1.0) * lower_[j].scale;
    return a;
}

double FoxHParams::default_abscissa() const noexcept
{
    const bool lo = std::isfinite(lower_bound_);
    const bool hi = std::isfinite(upper_bound_);
    if (lo && hi) return 0.5 * (lower_bound_ + upper_bound_);
    if (lo) return lower_bound_ + 1.0;
    if (hi) return upper_bound_ - 1.0;
    return 0.0;
}

double FoxHParams::abscissa_at(double fraction) const
{
    if (!(fraction > 0.0 && fraction < 1.0)) {
        throw DomainError("contour fraction must lie in (0, 1)");
    }
    const bool lo = std::isfinite(lower_bound_);
    const bool hi = std::isfinite(upper_bound_);
    if (lo && hi) return lower_bound_ + fraction * (upper_bound_ - lower_bound_);
    // Half-open: spread fractions over a two-unit window next to the finite end.
    if (lo) return lower_bound_ + 2.0 * fraction;
    if (hi) return upper_bound_ - 2.0 * (1.0 - fraction);
    return 4.0 * (fraction - 0.5);
}

std::string FoxHParams::describe() const
{
    std::ostringstream os;
    os << "H^{" << m_ << "," << n_ << "}_{" << p() << "," << q() << "}[";
    for (std::size_t j = 0; j < upper_.size(); ++j) {
        os << (j ? "," : "") << "(" << upper_[j].coeff << "," << upper_[j].scale << ")";
    }
    if (upper_.empty()) os << "-";
    os << "; ";
    for (std::size_t j = 0; j < lower_.size(); ++j) {
        os << (j ? "," : "") << "(" << lower_[j].coeff << "," << lower_[j].scale << ")";
    }
    if (lower_.empty()) os << "-";
    os << "]";
    return os.str();
}

FoxHResult fox_h_eval(const FoxHParams& params, double z, const FoxHOptions& options)
{
    if (!(z > 0.0) || !std::isfinite(z)) {
        throw DomainError("Fox H argument must be positive and finite, got " + std::to_string(z));
    }
    // Only the exponentially convergent regime on the positive real axis is
    // accepted; a* <= 0 leaves convergence to algebraic decay, which the
    // truncation rule cannot certify.
    if (!(params.a_star() > 0.0)) {
        throw DomainError("Fox H convergence screen failed (a* = " +
                          std::to_string(params.a_star()) + " <= 0): " + params.describe());
    }
    const double log_z = std::log(z);
    double c = params.default_abscissa();
    if (options.abscissa) {
        c = *options.abscissa;
    } else {
        // Far from z = 1 the midpoint contour can carry an integrand many
        // orders above the result; move to the saddle when that costs more
        // than three digits.
        const double saddle = saddle_abscissa(params, log_z);
        if (log_height(params, c, log_z) - log_height(params, saddle, log_z) > std::log(1e3)) c = saddle;
    }
    // Bounds are pole locations computed in floating point; an abscissa
    // within rounding of one would integrate straight through the pole.
    auto margin = [](double bound) { return 1e-9 * std::max(1.0, std::abs(bound)); };
    const double lo = params.contour_lower(), hi = params.contour_upper();
    if (!(c > lo + (std::isfinite(lo) ? margin(lo) : 0.0) && c < hi - (std::isfinite(hi) ? margin(hi) : 0.0))) {
        throw PoleError("contour abscissa " + std::to_string(c) +
                        " lies outside the pole-free strip (" +
                        std::to_string(params.contour_lower()) + ", " +
                        std::to_string(params.contour_upper()) + ")");
    }
    auto log_integrand = [&](double t, cplx& out) {
        const cplx s(c, t);
        if (!log_theta(params, s, out)) return false;
        out -= s * log_z;
        return true;
    };

    // Scan upward for the peak and the truncation height.
    double peak = -kInf;
    double t_peak = 0.0;
    double height = 0.0;
    const double log_tail = std::log(options.tail_ratio);
    constexpr double step = 0.25;
    for (double t = 0.0;; t += step) {
        if (t > options.max_height) {
            throw ConvergenceError("Fox H integrand tail did not decay below the truncation "
                                   "threshold by Im(s) = " +
                                   std::to_string(options.max_height) + ": " + params.describe());
        }
        cplx l;
        if (!log_integrand(t, l)) continue;
        const double mag = l.real();
        if (mag > peak) {
            peak = mag;
            t_peak = t;
        }
        if (t > t_peak && mag < peak + log_tail) {
            height = t;
            break;
        }
    }
    if (!std::isfinite(peak)) {
        throw ConvergenceError("Fox H integrand vanishes on the contour: " + params.describe());
    }

    auto integrand = [&](double t) -> cplx {
        cplx sum = 0.0;
        cplx l;
        if (log_integrand(t, l)) sum += std::exp(l - peak);
        if (log_integrand(-t, l)) sum += std::exp(l - peak);
        return sum;
    };

    QuadratureOptions qopt;
    qopt.rel_tol = options.rel_tol;
    qopt.l1_tol = 1e-14;
    qopt.initial_panels = std::clamp(static_cast<int>(std::ceil(height)), 4, 400);
    qopt.max_panels = 20000;
    const auto q = integrate_adaptive(integrand, 0.0, height, qopt);

    const double scale = std::exp(peak) / (2.0 * std::numbers::pi);
    FoxHResult r;
    r.value = q.value.real() * scale;
    r.imag_residue = q.value.imag() * scale;
    r.l1_norm = q.l1_norm * scale;
    // Log-gamma phases carry about 1e-13 relative error, amplified by the
    // size of the phase; that bounds the sum below about 1e-12 of its L1 mass.
    constexpr double kIntegrandRelError = 1e-12;
    r.abs_error = (q.abs_error + kIntegrandRelError * q.l1_norm) * scale;
    r.abscissa = c;
    r.height = height;
    if (!std::isfinite(r.value)) {
        throw ConvergenceError("Fox H evaluation overflowed: " + params.describe());
    }
    return r;
}

} // namespace secrecy::specfun
