#pragma once

#include "spherelift/rational.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace slift {

/// Deterministic random source. mt19937_64 output is fixed by the standard
/// and the mapping to doubles below avoids std::uniform_real_distribution
/// (whose output is implementation-defined), so streams are reproducible
/// byte-for-byte across platforms.
class Rng {
public:
    explicit Rng(uint64_t seed) : seed_(seed), gen_(seed) {}

    /// Independent substream; used to make per-plane draws scheduling-free.
    [[nodiscard]] Rng split(uint64_t index) const {
        return Rng(seed_ ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
    }

    uint64_t next_u64() { return gen_(); }

    double uniform01() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    /// Standard normal via Box-Muller (explicit formula, deterministic).
    double normal() {
        double u1 = uniform01(), u2 = uniform01();
        if (u1 < 1e-300) u1 = 1e-300;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    std::vector<double> unit_vector(int d) {
        std::vector<double> v(static_cast<size_t>(d));
        double norm2 = 0.0;
        do {
            norm2 = 0.0;
            for (auto& x : v) {
                x = normal();
                norm2 += x * x;
            }
        } while (norm2 < 1e-12);
        double inv = 1.0 / std::sqrt(norm2);
        for (auto& x : v) x *= inv;
        return v;
    }

    /// Rational in [-1, 1] with denominator up to `den_cap`.
    Rational rational_in_unit(long long den_cap = 1000) {
        long long den = 1 + static_cast<long long>(gen_() % static_cast<uint64_t>(den_cap));
        long long num = static_cast<long long>(gen_() % static_cast<uint64_t>(2 * den + 1)) - den;
        return {num, den};
    }

private:
    uint64_t seed_;
    std::mt19937_64 gen_;
};

}  // namespace slift
