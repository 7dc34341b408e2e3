#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "msmir/error.hpp"
#include "msmir/svd.hpp"
#include "oracles.hpp"
#include "random_corpus.hpp"

namespace msmir {
namespace {

void expect_valid(const SvdResult& s, double tol = 1e-8) {
    const Index k = s.rank();
    EXPECT_LE((s.U.transpose() * s.U - DenseMatrix::Identity(k, k)).cwiseAbs().maxCoeff(), tol);
    EXPECT_LE((s.V.transpose() * s.V - DenseMatrix::Identity(k, k)).cwiseAbs().maxCoeff(), tol);
    for (Index i = 0; i < k; ++i) {
        EXPECT_GE(s.sigma(i), 0.0);
        if (i > 0) {
            EXPECT_LE(s.sigma(i), s.sigma(i - 1));
        }
    }
}

TEST(SvdDense, Identity) {
    const auto s = svd_dense(DenseMatrix::Identity(3, 3));
    EXPECT_TRUE(s.sigma.isApprox(DenseVector::Ones(3)));
    expect_valid(s);
}

TEST(SvdDense, PaddedDiagonal) {
    DenseMatrix m = DenseMatrix::Zero(3, 2);
    m(0, 0) = 3;
    m(1, 1) = 2;
    const auto s = svd_dense(m);
    ASSERT_EQ(s.sigma.size(), 2);
    EXPECT_NEAR(s.sigma(0), 3.0, 1e-14);
    EXPECT_NEAR(s.sigma(1), 2.0, 1e-14);
}

TEST(SvdDense, RejectsNonFinite) {
    DenseMatrix m = DenseMatrix::Ones(2, 2);
    m(1, 0) = std::numeric_limits<double>::quiet_NaN();
    EXPECT_THROW(svd_dense(m), std::invalid_argument);
    m(1, 0) = std::numeric_limits<double>::infinity();
    EXPECT_THROW(svd_dense(m), std::invalid_argument);
}

TEST(SvdDense, MatchesJacobiGramOracle) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 50; ++trial) {
        const DenseMatrix m = testing::random_dense(rng, 8, 5);
        const auto s = svd_dense(m);
        const auto oracle = testing::gram_singular_values(m);
        ASSERT_EQ(s.sigma.size(), 5);
        for (Index i = 0; i < 5; ++i) EXPECT_NEAR(s.sigma(i), oracle[static_cast<std::size_t>(i)], 1e-8);
        const DenseMatrix recon = s.U * s.sigma.asDiagonal() * s.V.transpose();
        EXPECT_LE((m - recon).norm(), 1e-10 * (1.0 + m.norm()));
        expect_valid(s);
    }
}

TEST(SvdDense, SignConvention) {
    std::mt19937_64 rng(9);
    const DenseMatrix m = testing::random_dense(rng, 6, 4);
    const auto s = svd_dense(m);
    for (Index i = 0; i < s.U.cols(); ++i) {
        Index arg = 0;
        s.U.col(i).cwiseAbs().maxCoeff(&arg);
        EXPECT_GT(s.U(arg, i), 0.0);
    }
    const auto flipped = svd_dense(-m);
    EXPECT_LE((flipped.U - s.U).norm(), 1e-10);
    EXPECT_LE((flipped.V + s.V).norm(), 1e-10);
}

TEST(SvdDense, EmptyMatrix) {
    const auto s = svd_dense(DenseMatrix(0, 4));
    EXPECT_EQ(s.rank(), 0);
    EXPECT_EQ(s.V.rows(), 4);
}

TEST(SvdsSparse, Diagonal) {
    const auto a = SparseMatrix::from_triplets(3, 3, {{0, 0, 5.0}, {1, 1, 4.0}, {2, 2, 3.0}});
    const auto s = svds_sparse(a, 2);
    ASSERT_EQ(s.sigma.size(), 2);
    EXPECT_NEAR(s.sigma(0), 5.0, 1e-10);
    EXPECT_NEAR(s.sigma(1), 4.0, 1e-10);
    expect_valid(s);
}

TEST(SvdsSparse, AgreesWithDenseOnRandomInputs) {
    std::mt19937_64 rng(10);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = testing::random_sparse(rng, 50, 30, 0.15);
        const auto s = svds_sparse(a, 5);
        const auto d = svd_dense(a.to_dense());
        for (Index i = 0; i < 5; ++i) {
            EXPECT_NEAR(s.sigma(i), d.sigma(i), 1e-6 * d.sigma(0));
            EXPECT_LE(s.residuals[static_cast<std::size_t>(i)], 1e-6 * d.sigma(0));
            const double r = (a.multiply(DenseVector(s.V.col(i))) - s.sigma(i) * s.U.col(i)).norm();
            EXPECT_LE(r, 1e-6 * d.sigma(0));
        }
        expect_valid(s);
    }
}

TEST(SvdsSparse, WideMatrixUsesTranspose) {
    std::mt19937_64 rng(12);
    const auto a = testing::random_sparse(rng, 20, 60, 0.2);
    const auto s = svds_sparse(a, 4);
    const auto d = svd_dense(a.to_dense());
    EXPECT_EQ(s.U.rows(), 20);
    EXPECT_EQ(s.V.rows(), 60);
    for (Index i = 0; i < 4; ++i) EXPECT_NEAR(s.sigma(i), d.sigma(i), 1e-8 * d.sigma(0));
    expect_valid(s);
}

TEST(SvdsSparse, FullRankRequestOnRankDeficientInput) {
    std::mt19937_64 rng(13);
    const DenseMatrix low = testing::random_rank(rng, 12, 8, 3);
    const auto a = SparseMatrix::from_dense(low);
    const auto s = svds_sparse(a, 8);
    const auto d = svd_dense(low);
    for (Index i = 0; i < 3; ++i) EXPECT_NEAR(s.sigma(i), d.sigma(i), 1e-8 * d.sigma(0));
    for (Index i = 3; i < 8; ++i) EXPECT_LE(s.sigma(i), 1e-8 * d.sigma(0));
    expect_valid(s);
}

TEST(SvdsSparse, RepeatedSingularValues) {
    const auto a = SparseMatrix::from_triplets(6, 6, {{0, 0, 5.0}, {1, 1, 5.0}, {2, 2, 5.0}, {3, 3, 1.0}, {4, 4, 1.0}});
    const auto s = svds_sparse(a, 3);
    for (Index i = 0; i < 3; ++i) EXPECT_NEAR(s.sigma(i), 5.0, 1e-10);
}

TEST(SvdsSparse, ZeroMatrix) {
    const SparseMatrix a(5, 4);
    const auto s = svds_sparse(a, 2);
    EXPECT_EQ(s.sigma, DenseVector::Zero(2));
    expect_valid(s);
}

TEST(SvdsSparse, ArgumentAndConvergenceErrors) {
    std::mt19937_64 rng(14);
    const auto a = testing::random_sparse(rng, 40, 30, 0.3);
    EXPECT_THROW(svds_sparse(a, 0), std::invalid_argument);
    EXPECT_THROW(svds_sparse(a, 31), std::invalid_argument);
    SvdsOptions tight;
    tight.max_iter = 6;
    tight.tol = 1e-14;
    try {
        svds_sparse(a, 5, tight);
        FAIL() << "expected ConvergenceError";
    } catch (const ConvergenceError& e) {
        EXPECT_EQ(e.residuals().size(), 5u);
    }
    tight.max_iter = 3;
    EXPECT_THROW(svds_sparse(a, 5, tight), std::invalid_argument);
}

TEST(BestK, FullRankReconstructs) {
    std::mt19937_64 rng(15);
    const DenseMatrix m = testing::random_dense(rng, 7, 5);
    const auto s = svd_dense(m);
    EXPECT_LE((best_k(s, 5) - m).norm(), 1e-8 * m.norm());
}

TEST(BestK, DiagonalTruncation) {
    DenseMatrix m = DenseMatrix::Zero(2, 2);
    m(0, 0) = 3;
    m(1, 1) = 2;
    DenseMatrix expected = DenseMatrix::Zero(2, 2);
    expected(0, 0) = 3;
    EXPECT_LE((best_k(svd_dense(m), 1) - expected).norm(), 1e-14);
    EXPECT_THROW(best_k(svd_dense(m), 0), std::invalid_argument);
    EXPECT_THROW(best_k(svd_dense(m), 3), std::invalid_argument);
}

TEST(BestK, TailEnergyIdentity) {
    std::mt19937_64 rng(16);
    for (int trial = 0; trial < 20; ++trial) {
        const DenseMatrix m = testing::random_dense(rng, 6, 4);
        const auto s = svd_dense(m);
        const auto oracle = testing::gram_singular_values(m);
        const double err = (m - best_k(s, 2)).squaredNorm();
        EXPECT_NEAR(err, s.sigma(2) * s.sigma(2) + s.sigma(3) * s.sigma(3), 1e-8);
        EXPECT_NEAR(err, oracle[2] * oracle[2] + oracle[3] * oracle[3], 1e-8);
    }
}

TEST(NumericalRank, Thresholds) {
    DenseVector sigma(4);
    sigma << 10.0, 1.0, 1e-8, 1e-12;
    EXPECT_EQ(numerical_rank(sigma, 4, 4), 3);
    EXPECT_EQ(numerical_rank(sigma, 4, 4, 1e-6), 2);
    EXPECT_EQ(numerical_rank(DenseVector::Zero(3), 3, 3), 0);
    EXPECT_EQ(numerical_rank(DenseVector(0), 0, 3), 0);
}

TEST(LowrankShiftDistance, LowRankGivesZero) {
    std::mt19937_64 rng(18);
    const auto a = SparseMatrix::from_dense(testing::random_rank(rng, 20, 15, 4));
    EXPECT_NEAR(lowrank_shift_distance(a, 4), 0.0, 1e-6);
    EXPECT_NEAR(lowrank_shift_distance(a, 6), 0.0, 1e-6);
    EXPECT_EQ(lowrank_shift_distance(a, 15), 0.0);
    EXPECT_EQ(lowrank_shift_distance(SparseMatrix(4, 4), 2), 0.0);
    EXPECT_THROW(lowrank_shift_distance(a, 0), std::invalid_argument);
}

TEST(LowrankShiftDistance, MatchesDenseOracle) {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = testing::random_sparse(rng, 40, 25, 0.2);
        const DenseMatrix d = a.to_dense();
        const auto oracle = testing::gram_singular_values(d);
        double tail = 0.0;
        for (std::size_t i = 10; i < oracle.size(); ++i) tail += oracle[i] * oracle[i];
        const double expected = std::sqrt(tail) / d.norm();
        EXPECT_NEAR(lowrank_shift_distance(a, 10), expected, 1e-8);
        EXPECT_NEAR(lowrank_shift_distance(a, 10), (d - best_k(svd_dense(d), 10)).norm() / d.norm(), 1e-8);
    }
}

TEST(Cosine, Basics) {
    EXPECT_DOUBLE_EQ(cosine(DenseVector::Unit(2, 0), DenseVector::Unit(2, 0)), 1.0);
    EXPECT_DOUBLE_EQ(cosine(DenseVector::Unit(2, 0), DenseVector::Unit(2, 1)), 0.0);
    EXPECT_DOUBLE_EQ(cosine(DenseVector::Zero(2), DenseVector::Ones(2)), 0.0);
}

TEST(Cosine, SymmetricBoundedScaleInvariant) {
    std::mt19937_64 rng(20);
    std::uniform_real_distribution<double> scale(1e-3, 1e3);
    for (int trial = 0; trial < 200; ++trial) {
        const DenseVector u = testing::random_dense(rng, 9, 1);
        const DenseVector v = testing::random_dense(rng, 9, 1);
        const double c = cosine(u, v);
        EXPECT_EQ(c, cosine(v, u));
        EXPECT_LE(std::abs(c), 1.0);
        EXPECT_NEAR(cosine(DenseVector(scale(rng) * u), v), c, 1e-12);
        EXPECT_NEAR(cosine(u, DenseVector(scale(rng) * v)), c, 1e-12);
    }
}

TEST(SigmaCsv, Format) {
    std::ostringstream out;
    const std::vector<double> sigma{3.0, 2.0};
    write_sigma_csv(out, sigma);
    EXPECT_EQ(out.str(), "index,sigma\n1,3\n2,2\n");
}

} // namespace
} // namespace msmir
