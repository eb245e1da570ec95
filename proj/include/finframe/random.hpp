#pragma once

// Portable, seeded random streams. std::mt19937_64 is bit-exact across
// standard libraries, but the std distributions are not, so the uniform and
// normal transforms are implemented here.

#include "finframe/numerics.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace finframe {

/// SplitMix64 finalizer; used to derive independent sub-seeds.
constexpr std::uint64_t mix_seed(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Sub-seed for stream `stream` of item `index` under a base seed.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index, std::uint64_t stream = 0) noexcept {
    return mix_seed(mix_seed(mix_seed(seed) ^ index) ^ (stream * 0xd1b54a32d192ed03ULL));
}

class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller; the second variate is cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        while (u1 <= 0.0) {
            u1 = uniform();
        }
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * std::numbers::pi * u2;
        spare_ = r * std::sin(theta);
        has_spare_ = true;
        return r * std::cos(theta);
    }

    Scalar normal_scalar(bool complex_entries) {
        const double re = normal();
        return complex_entries ? Scalar(re, normal()) : Scalar(re, 0.0);
    }

    Vector normal_vector(std::size_t n, bool complex_entries = false) {
        Vector v(n);
        for (auto& z : v) {
            z = normal_scalar(complex_entries);
        }
        return v;
    }

    /// Uniformly distributed point on the unit sphere.
    Vector unit_vector(std::size_t n, bool complex_entries = false) {
        Vector v = normal_vector(n, complex_entries);
        double len = norm2(v);
        while (len == 0.0) {
            v = normal_vector(n, complex_entries);
            len = norm2(v);
        }
        for (auto& z : v) {
            z /= len;
        }
        return v;
    }

    Matrix normal_matrix(std::size_t rows, std::size_t cols, bool complex_entries = false) {
        Matrix m(rows, cols);
        for (std::size_t i = 0; i < rows; ++i) {
            for (std::size_t j = 0; j < cols; ++j) {
                m(i, j) = normal_scalar(complex_entries);
            }
        }
        return m;
    }

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace finframe
