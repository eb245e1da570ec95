#pragma once

// Dense complex matrices and the decompositions the frame code is built on:
// a one-sided (Hestenes) Jacobi SVD, the Moore-Penrose pseudoinverse and
// numerical rank.

#include "finframe/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace finframe {

using Scalar = std::complex<double>;
using Vector = std::vector<Scalar>;

inline bool is_finite(const Scalar& z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Row-major dense matrix over the complex doubles.
class Matrix {
public:
    Matrix() = default;

    /// Zero-filled rows x cols matrix.
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    /// Takes ownership of row-major entries; rejects wrong lengths and NaN/Inf.
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows_ * cols_) {
            throw ShapeError("matrix data length " + std::to_string(data_.size()) + " != " + std::to_string(rows_) +
                             "x" + std::to_string(cols_));
        }
        if (!std::all_of(data_.begin(), data_.end(), is_finite)) {
            throw InvalidInput("matrix contains non-finite entries");
        }
    }

    /// Real row-major entries, embedded with zero imaginary part.
    static Matrix from_real(std::size_t rows, std::size_t cols, std::span<const double> data) {
        std::vector<Scalar> z(data.begin(), data.end());
        return Matrix(rows, cols, std::move(z));
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = 1.0;
        }
        return m;
    }

    /// Matrix whose columns are the given vectors (all of equal length).
    static Matrix from_columns(std::span<const Vector> columns) {
        if (columns.empty()) {
            return {};
        }
        const std::size_t rows = columns.front().size();
        Matrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows) {
                throw ShapeError("from_columns: ragged columns");
            }
            for (std::size_t i = 0; i < rows; ++i) {
                m(i, j) = columns[j][i];
            }
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }
    bool empty() const noexcept { return data_.empty(); }

    Scalar& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    std::span<const Scalar> data() const noexcept { return data_; }

    Vector column(std::size_t j) const {
        Vector v(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            v[i] = (*this)(i, j);
        }
        return v;
    }

    Vector row(std::size_t i) const { return Vector(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_); }

    bool all_finite() const noexcept { return std::all_of(data_.begin(), data_.end(), is_finite); }

    bool is_real() const noexcept {
        return std::all_of(data_.begin(), data_.end(), [](const Scalar& z) { return z.imag() == 0.0; });
    }

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct SvdResult {
    std::vector<double> singular_values; // non-increasing, min(rows, cols) of them
    Matrix left_vectors;                 // rows x k, orthonormal columns
    Matrix right_vectors;                // cols x k, orthonormal columns
};

// ---------------------------------------------------------------------------
// Elementary operations

/// <x, y> = sum_i x_i conj(y_i): linear in the first slot.
inline Scalar inner(std::span<const Scalar> x, std::span<const Scalar> y) {
    if (x.size() != y.size()) {
        throw ShapeError("inner: length mismatch");
    }
    Scalar s{};
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * std::conj(y[i]);
    }
    return s;
}

inline double norm2(std::span<const Scalar> x) {
    double s = 0.0;
    for (const auto& z : x) {
        s += std::norm(z);
    }
    return std::sqrt(s);
}

inline double frobenius_norm(const Matrix& m) { return norm2(m.data()); }

inline Matrix adjoint(const Matrix& m) {
    Matrix r(m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            r(j, i) = std::conj(m(i, j));
        }
    }
    return r;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeError("matmul: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                         std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    }
    Matrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar aik = a(i, k);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                c(i, j) += aik * b(k, j);
            }
        }
    }
    return c;
}

inline Vector matvec(const Matrix& a, std::span<const Scalar> x) {
    if (a.cols() != x.size()) {
        throw ShapeError("matvec: matrix has " + std::to_string(a.cols()) + " columns, vector has " +
                         std::to_string(x.size()) + " entries");
    }
    Vector y(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Scalar s{};
        for (std::size_t j = 0; j < a.cols(); ++j) {
            s += a(i, j) * x[j];
        }
        y[i] = s;
    }
    return y;
}

/// u * v^T (no conjugation): entry (i, j) = u_i v_j.
inline Matrix outer(std::span<const Scalar> u, std::span<const Scalar> v) {
    Matrix m(u.size(), v.size());
    for (std::size_t i = 0; i < u.size(); ++i) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            m(i, j) = u[i] * v[j];
        }
    }
    return m;
}

inline Matrix subtract(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeError("subtract: shape mismatch");
    }
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            c(i, j) = a(i, j) - b(i, j);
        }
    }
    return c;
}

inline Matrix scale(const Matrix& a, Scalar s) {
    Matrix c(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            c(i, j) = s * a(i, j);
        }
    }
    return c;
}

inline Vector subtract(std::span<const Scalar> a, std::span<const Scalar> b) {
    if (a.size() != b.size()) {
        throw ShapeError("subtract: length mismatch");
    }
    Vector c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        c[i] = a[i] - b[i];
    }
    return c;
}

// ---------------------------------------------------------------------------
// SVD

namespace detail {

inline void require_nonempty_finite(const Matrix& m, const char* what) {
    if (m.empty()) {
        throw InvalidInput(std::string(what) + ": empty matrix");
    }
    if (!m.all_finite()) {
        throw InvalidInput(std::string(what) + ": non-finite entries");
    }
}

// Completes `basis` (some columns possibly zero-flagged in `have`) to an
// orthonormal set by Gram-Schmidt against the standard basis.
inline void complete_orthonormal(std::vector<Vector>& basis, const std::vector<bool>& have, std::size_t len) {
    std::vector<const Vector*> accepted;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (have[j]) {
            accepted.push_back(&basis[j]);
        }
    }
    std::size_t next_unit = 0;
    for (std::size_t j = 0; j < basis.size(); ++j) {
        if (have[j]) {
            continue;
        }
        while (next_unit < len) {
            Vector e(len);
            e[next_unit++] = 1.0;
            // Two passes of classical Gram-Schmidt.
            for (int pass = 0; pass < 2; ++pass) {
                for (const Vector* q : accepted) {
                    const Scalar c = inner(e, *q);
                    for (std::size_t i = 0; i < len; ++i) {
                        e[i] -= c * (*q)[i];
                    }
                }
            }
            const double n = norm2(e);
            if (n > 0.5) {
                for (auto& z : e) {
                    z /= n;
                }
                basis[j] = std::move(e);
                accepted.push_back(&basis[j]);
                break;
            }
        }
    }
}

// Thin SVD of a tall (rows >= cols) matrix.
inline SvdResult svd_tall(const Matrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    constexpr double eps = std::numeric_limits<double>::epsilon();
    constexpr int max_sweeps = 80;

    std::vector<Vector> u(n, Vector(m));
    std::vector<Vector> v(n, Vector(n));
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
            u[j][i] = a(i, j);
        }
        v[j][j] = 1.0;
    }

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double alpha = 0.0;
                double beta = 0.0;
                Scalar gamma{};
                for (std::size_t i = 0; i < m; ++i) {
                    alpha += std::norm(u[p][i]);
                    beta += std::norm(u[q][i]);
                    gamma += std::conj(u[p][i]) * u[q][i];
                }
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= eps * std::sqrt(alpha * beta)) {
                    continue;
                }
                rotated = true;
                // Rotate the pair (u_p, e^{-i phi} u_q), which has real coupling g.
                const Scalar phase = std::conj(gamma) / g;
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                auto rotate = [&](Vector& x, Vector& y) {
                    for (std::size_t i = 0; i < x.size(); ++i) {
                        const Scalar xi = x[i];
                        const Scalar yi = phase * y[i];
                        x[i] = c * xi - s * yi;
                        y[i] = s * xi + c * yi;
                    }
                };
                rotate(u[p], u[q]);
                rotate(v[p], v[q]);
            }
        }
        if (!rotated) {
            break;
        }
    }

    std::vector<double> sigma(n);
    for (std::size_t j = 0; j < n; ++j) {
        sigma[j] = norm2(u[j]);
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return sigma[x] > sigma[y]; });

    const double smax = n > 0 ? sigma[order.front()] : 0.0;
    const double floor = smax * static_cast<double>(m) * eps;

    std::vector<Vector> left(n);
    std::vector<bool> have(n, false);
    SvdResult r;
    r.singular_values.resize(n);
    r.right_vectors = Matrix(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = order[k];
        r.singular_values[k] = sigma[j];
        for (std::size_t i = 0; i < n; ++i) {
            r.right_vectors(i, k) = v[j][i];
        }
        if (sigma[j] > floor && sigma[j] > 0.0) {
            left[k] = u[j];
            for (auto& z : left[k]) {
                z /= sigma[j];
            }
            have[k] = true;
        } else {
            left[k] = Vector(m);
        }
    }
    complete_orthonormal(left, have, m);
    r.left_vectors = Matrix::from_columns(left);
    return r;
}

} // namespace detail

/// Thin singular value decomposition m = U diag(sigma) V^*.
inline SvdResult svd(const Matrix& m) {
    detail::require_nonempty_finite(m, "svd");
    if (m.rows() >= m.cols()) {
        return detail::svd_tall(m);
    }
    SvdResult t = detail::svd_tall(adjoint(m));
    std::swap(t.left_vectors, t.right_vectors);
    return t;
}

inline std::vector<double> singular_values(const Matrix& m) { return svd(m).singular_values; }

/// Default cut-off: max(rows, cols) * sigma_max * machine epsilon.
inline double default_rank_threshold(std::size_t rows, std::size_t cols, double sigma_max) {
    return static_cast<double>(std::max(rows, cols)) * sigma_max * std::numeric_limits<double>::epsilon();
}

namespace detail {
inline double effective_threshold(const Matrix& m, std::span<const double> sigma, double tol) {
    if (tol < 0.0 || !std::isfinite(tol)) {
        throw InvalidInput("tolerance must be finite and non-negative");
    }
    if (tol > 0.0) {
        return tol;
    }
    return default_rank_threshold(m.rows(), m.cols(), sigma.empty() ? 0.0 : sigma.front());
}
} // namespace detail

/// Number of singular values strictly above the threshold. tol == 0 selects
/// the default rule; tol > 0 is an absolute cut-off.
inline std::size_t numerical_rank(const Matrix& m, double tol = 0.0) {
    const auto sigma = singular_values(m);
    const double thr = detail::effective_threshold(m, sigma, tol);
    return static_cast<std::size_t>(std::count_if(sigma.begin(), sigma.end(), [&](double s) { return s > thr; }));
}

/// Moore-Penrose pseudoinverse. Singular values at or below the threshold
/// are treated as zero (same threshold rule as numerical_rank).
inline Matrix pinv(const Matrix& m, double tol = 0.0) {
    const SvdResult d = svd(m);
    const double thr = detail::effective_threshold(m, d.singular_values, tol);
    const std::size_t k = d.singular_values.size();
    Matrix p(m.cols(), m.rows());
    for (std::size_t r = 0; r < k; ++r) {
        const double s = d.singular_values[r];
        if (!(s > thr)) {
            continue;
        }
        const double inv = 1.0 / s;
        for (std::size_t i = 0; i < m.cols(); ++i) {
            const Scalar vi = d.right_vectors(i, r) * inv;
            for (std::size_t j = 0; j < m.rows(); ++j) {
                p(i, j) += vi * std::conj(d.left_vectors(j, r));
            }
        }
    }
    return p;
}

} // namespace finframe
