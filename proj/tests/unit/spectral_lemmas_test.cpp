#include <random>

#include <gtest/gtest.h>

#include "spectral_checks.hpp"

namespace msmir {
namespace {

constexpr double kTol = 1e-8;
constexpr int kInstances = 200;

TEST(SpectralLemmas, OrthogonalFactorPreservesSingularValues) {
    std::mt19937_64 rng(31);
    for (int i = 0; i < kInstances; ++i) EXPECT_LE(testing::orthogonal_invariance_gap(rng), kTol);
}

TEST(SpectralLemmas, ColumnBlockHasSmallerSingularValues) {
    std::mt19937_64 rng(32);
    for (int i = 0; i < kInstances; ++i) EXPECT_LE(testing::block_monotonicity_gap(rng), kTol);
}

TEST(SpectralLemmas, ProductBound) {
    std::mt19937_64 rng(33);
    for (int i = 0; i < kInstances; ++i) EXPECT_LE(testing::product_bound_gap(rng), kTol);
}

TEST(SpectralLemmas, BlockTruncationDominated) {
    std::mt19937_64 rng(34);
    for (int i = 0; i < kInstances; ++i) EXPECT_LE(testing::block_truncation_gap(rng), kTol);
}

TEST(SpectralLemmas, EckartYoungSampling) {
    std::mt19937_64 rng(35);
    for (int i = 0; i < 50; ++i) EXPECT_LE(testing::eckart_young_gap(rng), 1e-12);
}

} // namespace
} // namespace msmir
