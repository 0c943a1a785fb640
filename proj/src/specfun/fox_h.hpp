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

// Fox H-function of a positive real argument,
//
//   H^{m,n}_{p,q}[z | (a_1,A_1)..(a_p,A_p); (b_1,B_1)..(b_q,B_q)]
//     = 1/(2 pi i) int_L Theta(s) z^{-s} ds,
//
//   Theta(s) = prod_{j<=m} Gamma(b_j + B_j s) prod_{j<=n} Gamma(1 - a_j - A_j s)
//            / ( prod_{j>m} Gamma(1 - b_j - B_j s) prod_{j>n} Gamma(a_j + A_j s) ),
//
// evaluated on the vertical line Re(s) = c that separates the poles of the
// two numerator groups.

#include <optional>
#include <string>
#include <vector>

namespace secrecy::specfun {

struct FoxPair {
    double coeff;  // a_j or b_j
    double scale;  // A_j or B_j, strictly positive
};

class FoxHParams {
public:
    /// Throws DomainError when the orders, scales or pole separation are invalid.
    FoxHParams(int m, int n, std::vector<FoxPair> upper, std::vector<FoxPair> lower);

    int m() const noexcept { return m_; }
    int n() const noexcept { return n_; }
    int p() const noexcept { return static_cast<int>(upper_.size()); }
    int q() const noexcept { return static_cast<int>(lower_.size()); }
    const std::vector<FoxPair>& upper() const noexcept { return upper_; }
    const std::vector<FoxPair>& lower() const noexcept { return lower_; }

    /// Open interval of admissible contour abscissas; infinite ends are
    /// returned as +-infinity.
    double contour_lower() const noexcept { return lower_bound_; }
    double contour_upper() const noexcept { return upper_bound_; }

    /// Existence exponent a* = sum_{j<=n} A_j - sum_{j>n} A_j
    ///                       + sum_{j<=m} B_j - sum_{j>m} B_j.
    double a_star() const noexcept;

    /// Midpoint of the admissible interval, or one unit inside a half-open one.
    double default_abscissa() const noexcept;

    /// Abscissa at relative position `fraction` in (0, 1) of the interval.
    double abscissa_at(double fraction) const;

    std::string describe() const;

private:
    int m_, n_;
    std::vector<FoxPair> upper_;
    std::vector<FoxPair> lower_;
    double lower_bound_;
    double upper_bound_;
};

struct FoxHOptions {
    /// Explicit contour abscissa; defaults to FoxHParams::default_abscissa().
    std::optional<double> abscissa;
    double rel_tol = 1e-9;
    /// Truncate the contour once |integrand| drops below this fraction of its peak.
    double tail_ratio = 1e-12;
    double max_height = 2.0e4;
};

struct FoxHResult {
    double value = 0.0;
    /// Imaginary part of the contour integral; zero in exact arithmetic.
    double imag_residue = 0.0;
    double abs_error = 0.0;
    /// Integral of |integrand| along the truncated contour. Its ratio to
    /// |value| is the cancellation factor that bounds attainable accuracy.
    double l1_norm = 0.0;
    double abscissa = 0.0;
    double height = 0.0;
};

/// Full evaluation with diagnostics. Throws DomainError for z <= 0 or a
/// failed convergence screen, PoleError if an explicit abscissa hits a pole,
/// ConvergenceError if the quadrature does not settle.
FoxHResult fox_h_eval(const FoxHParams& params, double z, const FoxHOptions& options = {});

inline double fox_h(const FoxHParams& params, double z, const FoxHOptions& options = {})
{
    return fox_h_eval(params, z, options).value;
}

} // namespace secrecy::specfun
