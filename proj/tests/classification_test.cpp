#include "test_support.hpp"

#include <gtest/gtest.h>

#include <array>
#include <numbers>

using namespace finframe;
using namespace finframe::testing;

TEST(NormSum, Onb) {
    const auto r = norm_sum_check(new_frame(Matrix::identity(3)));
    EXPECT_NEAR(r.norm_sum_sq, 3.0, 1e-15);
    EXPECT_NEAR(r.lower_bound_product, 3.0, 1e-14);
    EXPECT_NEAR(r.upper_bound_product, 3.0, 1e-14);
    EXPECT_TRUE(r.sandwich_holds());
}

TEST(NormSum, D1) {
    const auto r = norm_sum_check(new_frame(d1_matrix()));
    EXPECT_NEAR(r.norm_sum_sq, 4.0, 1e-15); // 1 + 2 + 1
    EXPECT_NEAR(r.lower_bound_product, 2.7606, 1e-3);
    EXPECT_NEAR(r.upper_bound_product, 5.2394, 1e-3);
    EXPECT_TRUE(r.sandwich_holds());
    EXPECT_EQ(r.dim, 2u);
}

TEST(NormSum, SandwichOnRandomFrames) {
    Rng rng(200);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * 10);
        const std::size_t m = n + static_cast<std::size_t>(rng.uniform() * (2 * n + 1));
        const auto r = norm_sum_check(random_frame(n, m, derive_seed(200, trial), trial % 2 == 0));
        EXPECT_GE(r.norm_sum_sq, r.lower_bound_product - 1e-9);
        EXPECT_LE(r.norm_sum_sq, r.upper_bound_product + 1e-9);
    }
}

TEST(TightBound, OnbAndUnions) {
    EXPECT_NEAR(tight_bound_from_norms(new_frame(Matrix::identity(4))), 1.0, 1e-15);
    const std::array<double, 2> ones{1.0, 1.0};
    EXPECT_NEAR(tight_bound_from_norms(union_of_onbs(2, ones, 1)), 2.0, 1e-12);
    const std::array<double, 3> scaled{1.0, 3.0, 0.5};
    const Frame f = union_of_onbs(4, scaled, 2);
    EXPECT_NEAR(tight_bound_from_norms(f) / f.bounds().lower, 1.0, 1e-9);
}

TEST(TightBound, NormalizedTightFrameGivesCountOverDim) {
    // Three unit vectors at 120 degrees in R^2 (Mercedes-Benz frame): A = 3/2.
    const double pi = std::numbers::pi;
    Matrix d(2, 3);
    for (std::size_t k = 0; k < 3; ++k) {
        d(0, k) = std::cos(2.0 * pi * static_cast<double>(k) / 3.0);
        d(1, k) = std::sin(2.0 * pi * static_cast<double>(k) / 3.0);
    }
    const Frame f = new_frame(d);
    EXPECT_NEAR(tight_bound_from_norms(f), 1.5, 1e-12);
    EXPECT_NEAR(f.bounds().lower, 1.5, 1e-12);
}

TEST(TightBound, RejectsNonTight) { EXPECT_THROW(tight_bound_from_norms(new_frame(d1_matrix())), NotTight); }

TEST(Series, HarmonicSquares) {
    const auto s = scaled_onb_series(3, 1, 1000);
    EXPECT_NEAR(s.partial_sum, 1.64394, 1e-5);
    EXPECT_NEAR(s.limit, 1.6449340668482264, 1e-15);
    EXPECT_DOUBLE_EQ(s.tail_bound, 1e-3);
    EXPECT_TRUE(s.within_tail_bound());
}

TEST(Series, FourthPowers) {
    const auto s = scaled_onb_series(2, 2, 100);
    EXPECT_NEAR(s.limit, 1.0823232337111382, 1e-15);
    EXPECT_LE(std::abs(s.partial_sum - s.limit), 1.0 / 3e6);
    EXPECT_TRUE(s.within_tail_bound());
}

TEST(Series, SingleTermAndErrors) {
    EXPECT_NEAR(scaled_onb_series(5, 1, 1).partial_sum, 1.0, 1e-15);
    EXPECT_NEAR(scaled_onb_series(5, 2, 1).partial_sum, 1.0, 1e-15);
    EXPECT_THROW(scaled_onb_series(2, 3, 10), InvalidInput);
    EXPECT_THROW(scaled_onb_series(2, 1, 0), InvalidInput);
}

TEST(Series, IndependentOfUnitVector) {
    const double ref = scaled_onb_series(4, 1, 500, 0).partial_sum;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        EXPECT_NEAR(scaled_onb_series(4, 1, 500, seed).partial_sum, ref, 1e-12);
    }
}

TEST(Series, MonotoneAndBoundedByLimit) {
    double prev = 0.0;
    for (std::size_t l = 1; l <= 64; l *= 2) {
        const auto s = scaled_onb_series(2, 1, l);
        EXPECT_GT(s.partial_sum, prev);
        EXPECT_LE(s.partial_sum, s.limit + 1e-12);
        EXPECT_TRUE(s.within_tail_bound());
        prev = s.partial_sum;
    }
}

TEST(Divergence, UnsquaredNormsGrowLikeLog) {
    EXPECT_DOUBLE_EQ(norm_sum_divergence_check(3, 1), 3.0);
    EXPECT_GT(norm_sum_divergence_check(1, 1'000'000), std::log(1e6));
    EXPECT_GT(norm_sum_divergence_check(1, 1'000'000), 13.8);
    double prev = 0.0;
    for (std::size_t l = 1; l <= 1000; l *= 10) {
        const double v = norm_sum_divergence_check(2, l);
        EXPECT_GT(v, prev);
        EXPECT_GE(v, 2.0 * std::log(static_cast<double>(l)));
        prev = v;
    }
    // The squared counterpart stays bounded.
    EXPECT_LT(scaled_onb_series(3, 1, 1000).partial_sum * 3.0, std::numbers::pi * std::numbers::pi / 6.0 * 3.0);
}
