#pragma once

// Operation-count and wall-clock comparison of the two frame operator
// assembly algorithms.

#include "finframe/frame.hpp"
#include "finframe/random.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace finframe {

struct GridPoint {
    std::size_t dim = 0;
    std::size_t count = 0;
};

struct BenchRow {
    std::size_t dim = 0;
    std::size_t count = 0;
    std::uint64_t predicted_outer = 0;
    std::uint64_t predicted_matmul = 0;
    std::uint64_t measured_outer = 0;
    std::uint64_t measured_matmul = 0;
    std::uint64_t time_outer_ns = 0;
    std::uint64_t time_matmul_ns = 0;
    std::size_t repeats = 0;
    double max_abs_difference = 0.0; // ||S_outer - S_matmul||_F
};

namespace detail {

template <class Fn>
std::uint64_t median_time_ns(std::size_t repeats, Fn&& fn) {
    fn(); // warm-up, not timed
    std::vector<std::uint64_t> samples;
    samples.reserve(repeats);
    for (std::size_t r = 0; r < repeats; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        samples.push_back(
            static_cast<std::uint64_t>(std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
    }
    std::nth_element(samples.begin(), samples.begin() + static_cast<std::ptrdiff_t>(samples.size() / 2),
                     samples.end());
    return samples[samples.size() / 2];
}

} // namespace detail

inline std::vector<BenchRow> run_bench(const std::vector<GridPoint>& grid, std::size_t repeats, std::uint64_t seed) {
    if (repeats < 3) {
        throw InvalidInput("run_bench: repeats must be >= 3");
    }
    for (const auto& p : grid) {
        if (p.dim < 1 || p.count < p.dim) {
            throw InvalidInput("run_bench: grid point (" + std::to_string(p.dim) + ", " + std::to_string(p.count) +
                               ") needs count >= dim >= 1");
        }
    }
    std::vector<BenchRow> rows;
    rows.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto [dim, count] = grid[i];
        const Frame g = random_frame(dim, count, derive_seed(seed, i));

        BenchRow row;
        row.dim = dim;
        row.count = count;
        row.repeats = repeats;
        row.predicted_outer = predicted_flops(FrameOperatorAlgorithm::Outer, dim, count);
        row.predicted_matmul = predicted_flops(FrameOperatorAlgorithm::Matmul, dim, count);

        FlopCount outer_count;
        FlopCount matmul_count;
        const Matrix s_outer = frame_operator_outer(g, g, &outer_count);
        const Matrix s_matmul = frame_operator_matmul(g, g, &matmul_count);
        row.measured_outer = outer_count.total();
        row.measured_matmul = matmul_count.total();
        row.max_abs_difference = frobenius_norm(subtract(s_outer, s_matmul));

        row.time_outer_ns = detail::median_time_ns(repeats, [&] { (void)frame_operator_outer(g, g); });
        row.time_matmul_ns = detail::median_time_ns(repeats, [&] { (void)frame_operator_matmul(g, g); });
        rows.push_back(row);
    }
    return rows;
}

enum class Winner { Outer, Matmul, Tie };

inline const char* to_string(Winner w) noexcept {
    switch (w) {
    case Winner::Outer:
        return "outer";
    case Winner::Matmul:
        return "matmul";
    case Winner::Tie:
        return "tie";
    }
    return "?";
}

struct CrossoverEntry {
    std::size_t dim = 0;
    std::size_t count = 0;
    Winner winner = Winner::Tie;
};

/// Lower predicted operation count for every (N, M) with N <= M.
inline std::vector<CrossoverEntry> crossover_report(std::size_t max_dim, std::size_t max_count) {
    if (max_dim < 1 || max_count < 1) {
        throw InvalidInput("crossover_report: bounds must be >= 1");
    }
    std::vector<CrossoverEntry> out;
    for (std::size_t n = 1; n <= max_dim; ++n) {
        for (std::size_t m = n; m <= max_count; ++m) {
            const auto outer = predicted_flops(FrameOperatorAlgorithm::Outer, n, m);
            const auto mm = predicted_flops(FrameOperatorAlgorithm::Matmul, n, m);
            const Winner w = outer < mm ? Winner::Outer : (mm < outer ? Winner::Matmul : Winner::Tie);
            out.push_back({n, m, w});
        }
    }
    return out;
}

/// Entries with dim >= from_dim where Outer does not win.
inline std::vector<CrossoverEntry> crossover_exceptions(const std::vector<CrossoverEntry>& report,
                                                        std::size_t from_dim) {
    std::vector<CrossoverEntry> out;
    for (const auto& e : report) {
        if (e.dim >= from_dim && e.winner != Winner::Outer) {
            out.push_back(e);
        }
    }
    return out;
}

inline constexpr const char* bench_csv_header =
    "dim,count,predicted_outer,predicted_matmul,measured_outer,measured_matmul,time_outer_ns,time_matmul_ns,repeats";

inline void write_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows) {
    os << bench_csv_header << '\n';
    for (const auto& r : rows) {
        os << r.dim << ',' << r.count << ',' << r.predicted_outer << ',' << r.predicted_matmul << ','
           << r.measured_outer << ',' << r.measured_matmul << ',' << r.time_outer_ns << ',' << r.time_matmul_ns
           << ',' << r.repeats << '\n';
    }
}

} // namespace finframe
