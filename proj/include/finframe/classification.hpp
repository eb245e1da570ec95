#pragma once

// Norm-sum criteria for finite frames, and truncated versions of the
// infinite tight frames (e_k / l^p) of C^N.

#include "finframe/frame.hpp"
#include "finframe/random.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>

namespace finframe {

struct NormSumReport {
    double norm_sum_sq = 0.0;         // sum_k ||g_k||^2
    double lower_bound_product = 0.0; // A * N
    double upper_bound_product = 0.0; // B * N
    std::size_t dim = 0;

    /// A N <= sum ||g_k||^2 <= B N, with relative slack.
    bool sandwich_holds(double slack = 1e-9) const noexcept {
        const double s = slack * std::max(1.0, norm_sum_sq);
        return lower_bound_product - s <= norm_sum_sq && norm_sum_sq <= upper_bound_product + s;
    }
};

inline double norm_sum_squares(const Frame& f) {
    return frobenius_norm(f.synthesis_matrix()) * frobenius_norm(f.synthesis_matrix());
}

inline NormSumReport norm_sum_check(const Frame& f) {
    const auto b = f.bounds();
    const auto n = static_cast<double>(f.dim());
    return NormSumReport{norm_sum_squares(f), b.lower * n, b.upper * n, f.dim()};
}

/// For a tight frame, sum ||f_k||^2 / N recovers the bound A.
inline double tight_bound_from_norms(const Frame& f, double tol = 1e-10) {
    if (!is_tight(f, tol)) {
        const auto b = f.bounds();
        throw NotTight("frame is not tight: A = " + std::to_string(b.lower) + ", B = " + std::to_string(b.upper));
    }
    return norm_sum_squares(f) / static_cast<double>(f.dim());
}

struct SeriesCheck {
    int power = 1;
    std::size_t terms = 0;
    double partial_sum = 0.0;
    double limit = 0.0;
    double tail_bound = 0.0;

    bool within_tail_bound() const noexcept { return std::abs(partial_sum - limit) <= tail_bound; }
};

/// sum_{l=1}^{terms} sum_k |<x, e_k / l^p>|^2 for a unit vector x.
inline double scaled_onb_frame_sum(std::span<const Scalar> x, int power, std::size_t terms) {
    const std::size_t dim = x.size();
    double total = 0.0;
    // Smallest terms first.
    for (std::size_t l = terms; l >= 1; --l) {
        const double scale = 1.0 / std::pow(static_cast<double>(l), power);
        double level = 0.0;
        for (std::size_t k = 0; k < dim; ++k) {
            // <x, scale * e_k> = scale * x_k
            level += std::norm(scale * x[k]);
        }
        total += level;
    }
    return total;
}

/// Truncated lower bound of the tight frame (e_k / l^power); limit pi^2/6
/// for power 1 and pi^4/90 for power 2. Tail bounds: 1/L and 1/(3 L^3).
inline SeriesCheck scaled_onb_series(std::size_t dim, int power, std::size_t terms, std::uint64_t seed = 0) {
    if (power != 1 && power != 2) {
        throw InvalidInput("scaled_onb_series: power must be 1 or 2");
    }
    if (terms < 1 || dim < 1) {
        throw InvalidInput("scaled_onb_series: dim and terms must be >= 1");
    }
    Rng rng(seed);
    const Vector x = rng.unit_vector(dim, true);
    SeriesCheck r;
    r.power = power;
    r.terms = terms;
    r.partial_sum = scaled_onb_frame_sum(x, power, terms);
    const double pi = std::numbers::pi;
    const auto big_l = static_cast<double>(terms);
    if (power == 1) {
        r.limit = pi * pi / 6.0;
        r.tail_bound = 1.0 / big_l;
    } else {
        r.limit = pi * pi * pi * pi / 90.0;
        r.tail_bound = 1.0 / (3.0 * big_l * big_l * big_l);
    }
    return r;
}

/// sum_{l=1}^{terms} sum_k ||e_k / l|| = N H_L: the unsquared norms of the
/// same frame, which diverge.
inline double norm_sum_divergence_check(std::size_t dim, std::size_t terms) {
    if (terms < 1) {
        throw InvalidInput("norm_sum_divergence_check: terms must be >= 1");
    }
    double total = 0.0;
    for (std::size_t l = terms; l >= 1; --l) {
        total += static_cast<double>(dim) / static_cast<double>(l);
    }
    return total;
}

} // namespace finframe
