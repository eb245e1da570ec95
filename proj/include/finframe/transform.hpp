#pragma once

// Cross-Gram matrices and the frame transformation: the matrix
// G = G_{f, g~} that carries analysis coefficients <x, g_k> of a source
// frame to the analysis coefficients <x, f_i> of a target frame.

#include "finframe/frame.hpp"
#include "finframe/random.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>

namespace finframe {

/// Entry (j, m) = <f_m, g_j> for row sequence g and column sequence f.
struct CrossGram {
    Matrix matrix;
    std::size_t row_count = 0;
    std::size_t col_count = 0;
};

namespace detail {
inline void require_same_dim(const Frame& a, const Frame& b, const char* what) {
    if (a.dim() != b.dim()) {
        throw ShapeError(std::string(what) + ": ambient dimensions differ (" + std::to_string(a.dim()) + " vs " +
                         std::to_string(b.dim()) + ")");
    }
}
} // namespace detail

/// G_{rows, cols} = D_rows^* D_cols.
inline CrossGram cross_gram(const Frame& rows, const Frame& cols) {
    detail::require_same_dim(rows, cols, "cross_gram");
    return CrossGram{matmul(adjoint(rows.synthesis_matrix()), cols.synthesis_matrix()), rows.count(), cols.count()};
}

inline CrossGram gram(const Frame& f) { return cross_gram(f, f); }

/// Orthogonal projection of C^M onto ran(C_f): G_{f~, f} = pinv(D) D.
inline Matrix gram_projection(const Frame& f) { return cross_gram(f.dual(), f).matrix; }

/// Distance of c from ran(C_f); zero (to rounding) iff c is an analysis vector of f.
inline double range_distance(const Frame& f, const CoefficientVector& c) {
    if (c.size() != f.count()) {
        throw ShapeError("range_distance: coefficient length mismatch");
    }
    const Vector pc = matvec(gram_projection(f), c.values());
    return norm2(subtract(pc, c.values()));
}

/// Frame transformation from `source` (M1 elements) to `target` (M2 elements).
class TransformMatrix {
public:
    TransformMatrix(Frame source, Frame target)
        : source_(std::move(source)), target_(std::move(target)) {
        detail::require_same_dim(source_, target_, "frame_transform_matrix");
        // entry (i, k) = <g~_k, f_i>
        matrix_ = matmul(adjoint(target_.synthesis_matrix()), adjoint(pinv(source_.synthesis_matrix())));
    }

    const Matrix& matrix() const noexcept { return matrix_; }
    const Frame& source() const noexcept { return source_; }
    const Frame& target() const noexcept { return target_; }

private:
    Frame source_;
    Frame target_;
    Matrix matrix_;
};

inline TransformMatrix frame_transform_matrix(const Frame& source, const Frame& target) {
    return TransformMatrix(source, target);
}

/// T c. Coefficients outside ran(C_source) are not rejected; the
/// bijection onto ran(C_target) only holds on that range.
inline CoefficientVector apply_transform(const TransformMatrix& t, const CoefficientVector& c) {
    if (c.size() != t.source().count()) {
        throw ShapeError("apply_transform: " + std::to_string(c.size()) + " coefficients, source frame has " +
                         std::to_string(t.source().count()) + " elements");
    }
    return CoefficientVector(matvec(t.matrix(), c.values()));
}

/// x -> <x, g_k> -> T -> <x, f_i> -> sum_i (.)_i f~_i.
inline Vector reconstruct_via_transform(const Frame& source, const Frame& target, std::span<const Scalar> x) {
    const auto t = frame_transform_matrix(source, target);
    return synthesis(target.dual(), apply_transform(t, analysis(source, x)));
}

/// Frames and probe vector used in one stability round.
struct StabilityRound {
    Frame source;
    Frame target;
    Vector x;
};

/// Round `index` of a stability run; depends only on (seed, index).
inline StabilityRound stability_round(std::size_t dim, std::size_t m1, std::size_t m2, std::uint64_t seed,
                                      std::uint64_t index) {
    Frame g = random_frame(dim, m1, derive_seed(seed, index, 0));
    Frame f = random_frame(dim, m2, derive_seed(seed, index, 1));
    Rng rng(derive_seed(seed, index, 2));
    return StabilityRound{std::move(g), std::move(f), rng.unit_vector(dim)};
}

/// max over rounds of ||T C_g x - C_f x||_2 with fresh random frames and
/// unit vectors each round.
inline double transform_stability_trial(std::size_t dim, std::size_t m1, std::size_t m2, std::size_t trials,
                                        std::uint64_t seed) {
    if (dim < 1 || m1 < dim || m2 < dim) {
        throw InvalidInput("transform_stability_trial: need m1, m2 >= dim >= 1");
    }
    if (trials < 1) {
        throw InvalidInput("transform_stability_trial: trials must be >= 1");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < trials; ++i) {
        const auto round = stability_round(dim, m1, m2, seed, i);
        const auto t = frame_transform_matrix(round.source, round.target);
        const auto mapped = apply_transform(t, analysis(round.source, round.x));
        const auto direct = analysis(round.target, round.x);
        worst = std::max(worst, norm2(subtract(mapped.values(), direct.values())));
    }
    return worst;
}

} // namespace finframe
