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

// Counter-based random streams. Every stream is a pure function of
// (master seed, realization index, stream id), so a simulation can be cut
// into batches and scheduled on any number of threads without changing a
// single draw.

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace secrecy::montecarlo {

/// Philox4x32 with 10 rounds.
class Philox4x32 {
public:
    using Counter = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Counter generate(Counter ctr, Key key) noexcept
    {
        for (int round = 0; round < 10; ++round) {
            if (round > 0) {
                key[0] += kW0;
                key[1] += kW1;
            }
            const std::uint64_t p0 = std::uint64_t{kM0} * ctr[0];
            const std::uint64_t p1 = std::uint64_t{kM1} * ctr[2];
            const auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
            const auto lo0 = static_cast<std::uint32_t>(p0);
            const auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
            const auto lo1 = static_cast<std::uint32_t>(p1);
            ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
        }
        return ctr;
    }

private:
    static constexpr std::uint32_t kM0 = 0xD2511F53u;
    static constexpr std::uint32_t kM1 = 0xCD9E8D57u;
    static constexpr std::uint32_t kW0 = 0x9E3779B9u;
    static constexpr std::uint32_t kW1 = 0xBB67AE85u;
};

class RandomStream {
public:
    RandomStream(std::uint64_t seed, std::uint64_t realization, std::uint32_t stream_id = 0) noexcept
        : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)}
        , counter_{static_cast<std::uint32_t>(realization),
                   static_cast<std::uint32_t>(realization >> 32), stream_id, 0u}
    {
    }

    std::uint32_t next_u32() noexcept
    {
        if (used_ == 4) {
            block_ = Philox4x32::generate(counter_, key_);
            ++counter_[3];
            used_ = 0;
        }
        return block_[used_++];
    }

    /// Uniform on the open interval (0, 1) with 53 random bits.
    double uniform() noexcept
    {
        const std::uint64_t hi = next_u32();
        const std::uint64_t lo = next_u32();
        const std::uint64_t bits = ((hi << 32) | lo) >> 11;
        return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
    }

    double exponential() noexcept { return -std::log(uniform()); }

    double normal() noexcept
    {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        const double r = std::sqrt(-2.0 * std::log(uniform()));
        const double phi = 2.0 * std::numbers::pi * uniform();
        spare_ = r * std::sin(phi);
        has_spare_ = true;
        return r * std::cos(phi);
    }

    /// Standard gamma variate (unit scale), Marsaglia-Tsang squeeze.
    double gamma(double shape) noexcept
    {
        if (shape == 1.0) return exponential();
        if (shape < 1.0) {
            // Boost to shape + 1 and scale back by U^(1/shape).
            const double g = gamma(shape + 1.0);
            return g * std::pow(uniform(), 1.0 / shape);
        }
        const double d = shape - 1.0 / 3.0;
        const double c = 1.0 / std::sqrt(9.0 * d);
        for (;;) {
            double x, v;
            do {
                x = normal();
                v = 1.0 + c * x;
            } while (v <= 0.0);
            v = v * v * v;
            const double u = uniform();
            const double x2 = x * x;
            if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
            if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
        }
    }

private:
    Philox4x32::Key key_;
    Philox4x32::Counter counter_;
    Philox4x32::Counter block_{};
    int used_ = 4;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

} // namespace secrecy::montecarlo
