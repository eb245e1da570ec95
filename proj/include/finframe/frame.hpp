#pragma once

#include "finframe/errors.hpp"
#include "finframe/numerics.hpp"
#include "finframe/random.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace finframe {

/// Optimal frame bounds: A = sigma_min(D)^2, B = sigma_max(D)^2.
struct FrameBounds {
    double lower = 0.0;
    double upper = 0.0;
};

/// Coefficients (c_1, ..., c_M) in the coefficient space of an M-element frame.
class CoefficientVector {
public:
    CoefficientVector() = default;
    explicit CoefficientVector(Vector values) : values_(std::move(values)) {}

    std::size_t size() const noexcept { return values_.size(); }
    const Scalar& operator[](std::size_t k) const noexcept { return values_[k]; }
    std::span<const Scalar> values() const noexcept { return values_; }
    const Vector& vector() const noexcept { return values_; }

private:
    Vector values_;
};

/// Scalar operation tally. Complex values count as one scalar each.
struct FlopCount {
    std::uint64_t additions = 0;
    std::uint64_t multiplications = 0;
    std::uint64_t conjugations = 0;

    std::uint64_t total() const noexcept { return additions + multiplications + conjugations; }

    FlopCount& operator+=(const FlopCount& o) noexcept {
        additions += o.additions;
        multiplications += o.multiplications;
        conjugations += o.conjugations;
        return *this;
    }
};

enum class FrameOperatorAlgorithm { Outer, Matmul };

/// A finite frame for C^N, stored as its N x M synthesis matrix whose
/// columns are the frame elements. Copies share immutable state; the
/// canonical dual is computed once on first request.
class Frame {
public:
    /// Validates that the columns span C^N (numerical rank == N).
    static Frame from_synthesis(Matrix synthesis) {
        if (synthesis.empty()) {
            throw InvalidInput("frame: empty synthesis matrix");
        }
        if (!synthesis.all_finite()) {
            throw InvalidInput("frame: non-finite entries");
        }
        const std::size_t n = synthesis.rows();
        const std::size_t m = synthesis.cols();
        const auto sigma = singular_values(synthesis);
        const double thr = default_rank_threshold(n, m, sigma.front());
        const auto rank =
            static_cast<std::size_t>(std::count_if(sigma.begin(), sigma.end(), [&](double s) { return s > thr; }));
        if (m < n || rank < n) {
            throw NotAFrame(rank, n, m);
        }
        const double smin = sigma[n - 1];
        const double smax = sigma.front();
        return Frame(std::move(synthesis), FrameBounds{smin * smin, smax * smax});
    }

    const Matrix& synthesis_matrix() const noexcept { return state_->synthesis; }
    std::size_t dim() const noexcept { return state_->synthesis.rows(); }
    std::size_t count() const noexcept { return state_->synthesis.cols(); }
    const FrameBounds& bounds() const noexcept { return state_->bounds; }

    /// The k-th frame element g_k (0-based).
    Vector element(std::size_t k) const { return state_->synthesis.column(k); }

    /// Canonical dual (S^{-1} g_k); synthesis matrix adjoint(pinv(D)).
    const Frame& dual() const {
        std::call_once(state_->dual_once, [this] {
            state_->dual = std::make_unique<Frame>(from_synthesis(adjoint(pinv(state_->synthesis))));
        });
        return *state_->dual;
    }

private:
    struct State {
        Matrix synthesis;
        FrameBounds bounds;
        std::once_flag dual_once;
        std::unique_ptr<Frame> dual;
    };

    Frame(Matrix synthesis, FrameBounds bounds) : state_(std::make_shared<State>()) {
        state_->synthesis = std::move(synthesis);
        state_->bounds = bounds;
    }

    std::shared_ptr<State> state_;
};

inline Frame new_frame(Matrix synthesis) { return Frame::from_synthesis(std::move(synthesis)); }

/// Frame (U e_k) for the standard ONB of C^M; U must be surjective.
inline Frame onb_image_frame(const Matrix& u) { return Frame::from_synthesis(u); }

/// Frame with i.i.d. standard normal entries (real, or complex with
/// independent real and imaginary parts). Redraws on rank deficiency.
inline Frame random_frame(std::size_t dim, std::size_t count, std::uint64_t seed, bool complex_entries = false) {
    if (dim < 1 || count < dim) {
        throw InvalidInput("random_frame: count must be >= dim >= 1 (dim " + std::to_string(dim) + ", count " +
                           std::to_string(count) + ")");
    }
    Rng rng(seed);
    constexpr int max_attempts = 100;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        try {
            return Frame::from_synthesis(rng.normal_matrix(dim, count, complex_entries));
        } catch (const NotAFrame&) {
        }
    }
    throw GenerationFailed("random_frame: no full-rank draw in 100 attempts");
}

inline FrameBounds frame_bounds(const Frame& f) { return f.bounds(); }

inline bool is_tight(const Frame& f, double tol = 1e-10) {
    const auto& b = f.bounds();
    return (b.upper - b.lower) / b.upper <= tol;
}

inline const Frame& dual_frame(const Frame& f) { return f.dual(); }

/// c_k = <x, g_k>.
inline CoefficientVector analysis(const Frame& f, std::span<const Scalar> x) {
    if (x.size() != f.dim()) {
        throw ShapeError("analysis: vector length " + std::to_string(x.size()) + " != frame dimension " +
                         std::to_string(f.dim()));
    }
    const Matrix& d = f.synthesis_matrix();
    Vector c(f.count());
    for (std::size_t k = 0; k < f.count(); ++k) {
        Scalar s{};
        for (std::size_t i = 0; i < f.dim(); ++i) {
            s += x[i] * std::conj(d(i, k));
        }
        c[k] = s;
    }
    return CoefficientVector(std::move(c));
}

/// sum_k c_k g_k.
inline Vector synthesis(const Frame& f, const CoefficientVector& c) {
    if (c.size() != f.count()) {
        throw ShapeError("synthesis: " + std::to_string(c.size()) + " coefficients for a frame of " +
                         std::to_string(f.count()) + " elements");
    }
    return matvec(f.synthesis_matrix(), c.values());
}

/// Rebuilds a vector from frame coefficients. With via_dual, `c` holds
/// analysis coefficients <x, g_k> and is synthesized with the dual elements;
/// otherwise `c` holds dual coefficients <x, g~_k> synthesized with g_k.
inline Vector reconstruct(const Frame& f, const CoefficientVector& c, bool via_dual = true) {
    return via_dual ? synthesis(f.dual(), c) : synthesis(f, c);
}

// ---------------------------------------------------------------------------
// Frame operator S_{g, gamma} = sum_k gamma_k (x) conj(g_k) = D_gamma C_g

namespace detail {
inline void require_same_shape(const Frame& g, const Frame& gamma, const char* what) {
    if (g.dim() != gamma.dim() || g.count() != gamma.count()) {
        throw ShapeError(std::string(what) + ": frames must have equal dimension and element count");
    }
}
} // namespace detail

/// Closed-form operation counts: Outer -> M N^2 + 3 M N - 2 N,
/// Matmul -> N^2 (2M - 1).
inline std::uint64_t predicted_flops(FrameOperatorAlgorithm algorithm, std::uint64_t dim, std::uint64_t count) {
    if (dim < 1 || count < 1) {
        throw InvalidInput("predicted_flops: dim and count must be >= 1");
    }
    const std::uint64_t n = dim;
    const std::uint64_t m = count;
    if (algorithm == FrameOperatorAlgorithm::Outer) {
        return m * n * n + 3 * m * n - 2 * n;
    }
    return n * n * (2 * m - 1);
}

/// Sum of rank-one terms gamma_k conj(g_k)^T. The tally charges N
/// conjugations and N^2 products per element, and 2N operations for each
/// of the M-1 accumulations, which is the accounting behind the published
/// M N^2 + 3 M N - 2 N total (an entrywise tally of the sums would be N^2).
inline Matrix frame_operator_outer(const Frame& g, const Frame& gamma, FlopCount* counter = nullptr) {
    detail::require_same_shape(g, gamma, "frame_operator_outer");
    const std::size_t n = g.dim();
    const std::size_t m = g.count();
    const Matrix& dg = g.synthesis_matrix();
    const Matrix& dgamma = gamma.synthesis_matrix();

    FlopCount tally;
    Matrix s(n, n);
    Vector conj_g(n);
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            conj_g[i] = std::conj(dg(i, k));
            ++tally.conjugations;
        }
        for (std::size_t r = 0; r < n; ++r) {
            const Scalar gr = dgamma(r, k);
            for (std::size_t c = 0; c < n; ++c) {
                s(r, c) += gr * conj_g[c];
                ++tally.multiplications;
            }
        }
        if (k > 0) {
            tally.additions += 2 * n;
        }
    }
    if (counter != nullptr) {
        *counter += tally;
    }
    return s;
}

/// D_gamma times the analysis matrix C_g = D_g^*, one inner product per
/// entry: M products and M - 1 additions. C_g is treated as given, so no
/// conjugations are charged.
inline Matrix frame_operator_matmul(const Frame& g, const Frame& gamma, FlopCount* counter = nullptr) {
    detail::require_same_shape(g, gamma, "frame_operator_matmul");
    const std::size_t n = g.dim();
    const std::size_t m = g.count();
    const Matrix& dg = g.synthesis_matrix();
    const Matrix& dgamma = gamma.synthesis_matrix();

    FlopCount tally;
    Matrix s(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            Scalar acc = dgamma(r, 0) * std::conj(dg(c, 0));
            ++tally.multiplications;
            for (std::size_t k = 1; k < m; ++k) {
                acc += dgamma(r, k) * std::conj(dg(c, k));
                ++tally.multiplications;
                ++tally.additions;
            }
            s(r, c) = acc;
        }
    }
    if (counter != nullptr) {
        *counter += tally;
    }
    return s;
}

/// S = D D^* of a single frame.
inline Matrix frame_operator(const Frame& f) { return frame_operator_matmul(f, f); }

} // namespace finframe
