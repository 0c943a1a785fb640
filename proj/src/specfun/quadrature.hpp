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

// Globally adaptive 7/15-point Gauss-Kronrod quadrature over a finite
// interval. The value type may be real or complex; the error estimate is
// always a magnitude.

#include "common/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <queue>
#include <string>
#include <vector>

namespace secrecy::specfun {

template <typename T>
struct QuadratureResult {
    T value{};
    double abs_error = 0.0;
    /// Integral of |f|, used to judge cancellation.
    double l1_norm = 0.0;
    int panels = 0;
};

struct QuadratureOptions {
    double rel_tol = 1e-9;
    double abs_tol = 0.0;
    /// Floor relative to the integral of |f|; stops refinement when the
    /// remaining error is below what cancellation allows.
    double l1_tol = 1e-14;
    int initial_panels = 1;
    int max_panels = 4000;
};

namespace detail {

// Nodes of the 15-point Kronrod rule on [-1, 1]; odd indices are Gauss nodes.
inline constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
inline constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
inline constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

template <typename T>
double magnitude(const T& v)
{
    return std::abs(v);
}

template <typename T>
struct Panel {
    double a, b;
    T value;
    double error;
    double l1;
    bool operator<(const Panel& o) const { return error < o.error; }
};

template <typename T, typename F>
Panel<T> gauss_kronrod_15(F& f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const T fc = f(center);
    T kronrod = fc * kWgk[7];
    T gauss = fc * kWg[3];
    double l1 = magnitude(fc) * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const T f1 = f(center - dx);
        const T f2 = f(center + dx);
        kronrod += (f1 + f2) * kWgk[j];
        l1 += (magnitude(f1) + magnitude(f2)) * kWgk[j];
        if (j % 2 == 1) gauss += (f1 + f2) * kWg[j / 2];
    }
    return {a, b, kronrod * half, magnitude(kronrod - gauss) * half, l1 * std::abs(half)};
}

} // namespace detail

template <typename F>
auto integrate_adaptive(F f, double a, double b, const QuadratureOptions& opt = {})
    -> QuadratureResult<decltype(f(a))>
{
    using T = decltype(f(a));
    using detail::Panel;
    std::priority_queue<Panel<T>> heap;
    T total{};
    double err = 0.0;
    double l1 = 0.0;
    const int n0 = std::max(1, opt.initial_panels);
    const double width = (b - a) / n0;
    for (int i = 0; i < n0; ++i) {
        const double lo = a + i * width;
        const double hi = (i + 1 == n0) ? b : lo + width;
        auto p = detail::gauss_kronrod_15<T>(f, lo, hi);
        total += p.value;
        err += p.error;
        l1 += p.l1;
        heap.push(p);
    }
    int panels = n0;
    auto converged = [&] {
        const double target =
            std::max({opt.abs_tol, opt.rel_tol * detail::magnitude(total), opt.l1_tol * l1});
        return err <= target;
    };
    while (!converged()) {
        if (panels >= opt.max_panels) {
            throw ConvergenceError("adaptive quadrature exceeded " + std::to_string(opt.max_panels) +
                                   " panels; achieved error " + std::to_string(err) +
                                   " on value magnitude " +
                                   std::to_string(detail::magnitude(total)));
        }
        Panel<T> worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        auto left = detail::gauss_kronrod_15<T>(f, worst.a, mid);
        auto right = detail::gauss_kronrod_15<T>(f, mid, worst.b);
        total += left.value + right.value - worst.value;
        err += left.error + right.error - worst.error;
        l1 += left.l1 + right.l1 - worst.l1;
        heap.push(left);
        heap.push(right);
        ++panels;
    }
    // Re-sum to shed the drift accumulated by incremental updates.
    T resum{};
    double err_sum = 0.0;
    double l1_sum = 0.0;
    while (!heap.empty()) {
        resum += heap.top().value;
        err_sum += heap.top().error;
        l1_sum += heap.top().l1;
        heap.pop();
    }
    return {resum, err_sum, l1_sum, panels};
}

} // namespace secrecy::specfun
