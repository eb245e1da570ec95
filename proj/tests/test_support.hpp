#pragma once

// Shared fixtures and independent oracles for the test suites. The oracles
// go through Eigen, never through finframe's own SVD/pinv.

#include "finframe/finframe.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

namespace finframe::testing {

inline Matrix d1_matrix() {
    const double c = std::cos(std::numbers::pi / 6.0);
    const double s = std::sin(std::numbers::pi / 6.0);
    const double data[] = {c, -1.0, 0.0, s, 1.0, -1.0};
    return Matrix::from_real(2, 3, data);
}

inline Matrix d2_matrix() {
    const double data[] = {-0.4205, 0.0682, -0.3814, 0.1361, -0.3176, 0.4542, 0.6770, -0.2592};
    return Matrix::from_real(2, 4, data);
}

inline Matrix d3_matrix() {
    const double data[] = {-0.9803, -0.6026, -0.6024, -0.1098, -0.1627, -0.7222, 0.2076, -0.9695,
                           0.8636,  0.6924,  -0.5945, -0.4556, 0.4936,  -0.0680, 0.0503};
    return Matrix::from_real(3, 5, data);
}

inline Eigen::MatrixXcd to_eigen(const Matrix& m) {
    Eigen::MatrixXcd e(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            e(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = m(i, j);
        }
    }
    return e;
}

inline Matrix from_eigen(const Eigen::MatrixXcd& e) {
    Matrix m(static_cast<std::size_t>(e.rows()), static_cast<std::size_t>(e.cols()));
    for (Eigen::Index i = 0; i < e.rows(); ++i) {
        for (Eigen::Index j = 0; j < e.cols(); ++j) {
            m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = e(i, j);
        }
    }
    return m;
}

/// Singular values by Eigen's two-sided Jacobi SVD, non-increasing.
inline std::vector<double> oracle_singular_values(const Matrix& m) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(to_eigen(m));
    const auto& s = svd.singularValues();
    return std::vector<double>(s.data(), s.data() + s.size());
}

/// Pseudoinverse by Eigen's complete orthogonal decomposition.
inline Matrix oracle_pinv(const Matrix& m) {
    return from_eigen(Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXcd>(to_eigen(m)).pseudoInverse());
}

/// Frame operator as the plain product D_gamma D_g^* in Eigen.
inline Matrix oracle_frame_operator(const Matrix& dg, const Matrix& dgamma) {
    return from_eigen(to_eigen(dgamma) * to_eigen(dg).adjoint());
}

inline double relative_frobenius(const Matrix& a, const Matrix& b) {
    return frobenius_norm(subtract(a, b)) / std::max(1.0, frobenius_norm(b));
}

inline double vector_error(std::span<const Scalar> a, std::span<const Scalar> b) { return norm2(subtract(a, b)); }

/// Random unitary N x N from the left singular vectors of a normal matrix.
inline Matrix random_unitary(std::size_t n, std::uint64_t seed, bool complex_entries = false) {
    Rng rng(seed);
    return svd(rng.normal_matrix(n, n, complex_entries)).left_vectors;
}

/// Union of ONBs of C^N, the j-th scaled by scales[j]; a tight frame with
/// bound sum_j scales[j]^2.
inline Frame union_of_onbs(std::size_t n, std::span<const double> scales, std::uint64_t seed) {
    Matrix d(n, n * scales.size());
    for (std::size_t b = 0; b < scales.size(); ++b) {
        const Matrix u = random_unitary(n, derive_seed(seed, b), true);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                d(i, b * n + j) = scales[b] * u(i, j);
            }
        }
    }
    return new_frame(std::move(d));
}

} // namespace finframe::testing
