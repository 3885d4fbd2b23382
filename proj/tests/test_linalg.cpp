// Copyright 2026 The Quartit Tomography Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <limits>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "quartit/error.hpp"
#include "quartit/linalg.hpp"

using namespace quartit;

TEST(Svd, IdentityHasUnitValues) {
    const auto result = linalg::svd(Eigen::Matrix4d::Identity());
    ASSERT_EQ(result.singular_values.size(), 4);
    for (int i = 0; i < 4; ++i) {
        EXPECT_DOUBLE_EQ(result.singular_values(i), 1.0);
    }
}

TEST(Svd, RandomTallMatchesGramEigenvalues) {
    std::mt19937_64 rng(7);
    const RealMatrix a = oracle::random_matrix(rng, 5, 3);
    const RealVector ours = linalg::svd(a).singular_values;
    const RealVector reference = oracle::singular_values_via_gram(a);
    ASSERT_EQ(ours.size(), 3);
    for (int i = 0; i < 3; ++i) {
        EXPECT_NEAR(ours(i), reference(i), 1e-9);
    }
}

TEST(Svd, WideInputIsTransposed) {
    std::mt19937_64 rng(8);
    const RealMatrix a = oracle::random_matrix(rng, 3, 7);
    const auto result = linalg::svd(a, true);
    ASSERT_EQ(result.singular_values.size(), 3);
    const RealMatrix rebuilt = result.u * result.singular_values.asDiagonal() * result.v.transpose();
    EXPECT_LE((rebuilt - a).norm(), 1e-10 * result.singular_values(0));
}

TEST(Svd, RejectsNonFinite) {
    RealMatrix a = RealMatrix::Identity(3, 3);
    a(1, 2) = std::numeric_limits<double>::quiet_NaN();
    try {
        (void)linalg::svd(a);
        FAIL() << "expected an error";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidInput);
    }
    EXPECT_THROW((void)linalg::svd(RealMatrix(0, 0)), Error);
}

TEST(Svd, RankDeficientVectorsStillReconstruct) {
    RealMatrix a(4, 3);
    a << 1, 2, 3, 2, 4, 6, 0, 1, 1, 1, 3, 4; // column 3 = column 1 + column 2
    const auto result = linalg::svd(a, true);
    EXPECT_LE(result.singular_values(2), 1e-12 * result.singular_values(0));
    const RealMatrix rebuilt = result.u * result.singular_values.asDiagonal() * result.v.transpose();
    EXPECT_LE((rebuilt - a).norm(), 1e-10 * result.singular_values(0));
    EXPECT_LE((result.u.transpose() * result.u - RealMatrix::Identity(3, 3)).norm(), 1e-10);
}

// Property sweep over random shapes.
TEST(SvdProperty, ValuesSortedAndReconstruct) {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> dim(1, 12);
    for (int trial = 0; trial < 200; ++trial) {
        const RealMatrix a = oracle::random_matrix(rng, dim(rng), dim(rng));
        const auto result = linalg::svd(a, true);
        const auto k = std::min(a.rows(), a.cols());
        ASSERT_EQ(result.singular_values.size(), k);
        for (Eigen::Index i = 1; i < k; ++i) {
            ASSERT_GE(result.singular_values(i - 1), result.singular_values(i));
        }
        ASSERT_GE(result.singular_values(k - 1), 0.0);
        const RealMatrix rebuilt = result.u * result.singular_values.asDiagonal() * result.v.transpose();
        ASSERT_LE(linalg::spectral_norm(RealMatrix(rebuilt - a)), 1e-10 * result.singular_values(0));
    }
}

TEST(SvdProperty, LargestValueIsPowerIterationNorm) {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> dim(1, 10);
    for (int trial = 0; trial < 100; ++trial) {
        const RealMatrix a = oracle::random_matrix(rng, dim(rng), dim(rng));
        const double expected = oracle::power_iteration_norm(a);
        ASSERT_NEAR(linalg::spectral_norm(a), expected, 1e-9 * std::max(1.0, expected));
    }
}

TEST(ConditionNumber, IdentityIsOne) {
    EXPECT_DOUBLE_EQ(linalg::condition_number_spectral(Eigen::Matrix3d::Identity()), 1.0);
}

TEST(ConditionNumber, SingularGivesInfinity) {
    RealMatrix a(3, 3);
    a << 1, 0, 0, 0, 1, 0, 0, 0, 0;
    EXPECT_TRUE(std::isinf(linalg::condition_number_spectral(a)));
}

TEST(ConditionNumberProperty, ScaleInvariant) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> scale(-50.0, 50.0);
    for (int trial = 0; trial < 100; ++trial) {
        const RealMatrix a = oracle::random_matrix(rng, 6, 4);
        double c = scale(rng);
        if (std::abs(c) < 1e-3) c = 1.0;
        const double k1 = linalg::condition_number_spectral(a);
        const double k2 = linalg::condition_number_spectral(RealMatrix(c * a));
        ASSERT_NEAR(k2, k1, 1e-9 * k1);
    }
}

TEST(ConditionNumberProperty, GramSquaresKappa) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 100; ++trial) {
        const RealMatrix a = oracle::random_matrix(rng, 8, 5);
        const double ka = linalg::condition_number_spectral(a);
        const double kc = linalg::condition_number_spectral(linalg::normal_matrix(a));
        ASSERT_NEAR(kc, ka * ka, 1e-8 * ka * ka);
    }
}

TEST(LeastSquares, IdentityReturnsRhs) {
    RealVector b(4);
    b << 1.5, -2, 0.25, 7;
    const RealVector x = linalg::least_squares_solve(RealMatrix::Identity(4, 4), b);
    EXPECT_LE((x - b).norm(), 1e-14);
}

TEST(LeastSquares, MatchesExplicitTwoByTwoNormalEquations) {
    RealMatrix a(3, 2);
    a << 1, 2, 3, 4, 5, 7;
    RealVector b(3);
    b << 1, -1, 2;
    // C = A^T A inverted by the 2x2 cofactor formula.
    const Eigen::Matrix2d c = a.transpose() * a;
    const double det = c(0, 0) * c(1, 1) - c(0, 1) * c(1, 0);
    Eigen::Matrix2d inverse;
    inverse << c(1, 1), -c(0, 1), -c(1, 0), c(0, 0);
    inverse /= det;
    const Eigen::Vector2d expected = inverse * (a.transpose() * b);
    const RealVector x = linalg::least_squares_solve(a, b);
    EXPECT_NEAR(x(0), expected(0), 1e-12);
    EXPECT_NEAR(x(1), expected(1), 1e-12);
}

TEST(LeastSquares, RankDeficientNamesRank) {
    RealMatrix a(4, 3);
    a << 1, 2, 3, 2, 4, 6, 0, 1, 1, 1, 3, 4;
    try {
        (void)linalg::least_squares_solve(a, RealVector::Ones(4));
        FAIL() << "expected an error";
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::RankDeficient);
        EXPECT_NE(std::string(e.what()).find("rank 2"), std::string::npos) << e.what();
    }
}

TEST(LeastSquares, ShapeErrors) {
    EXPECT_THROW((void)linalg::least_squares_solve(RealMatrix::Ones(2, 3), RealVector::Ones(2)), Error);
    EXPECT_THROW((void)linalg::least_squares_solve(RealMatrix::Identity(3, 3), RealVector::Ones(2)), Error);
}

TEST(LeastSquaresProperty, NormalEquationResidualVanishes) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> cols(1, 8);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = cols(rng);
        const RealMatrix a = oracle::random_matrix(rng, n + 4, n);
        const RealVector b = oracle::random_matrix(rng, n + 4, 1);
        const RealVector x = linalg::least_squares_solve(a, b);
        const RealVector normal_residual = a.transpose() * (a * x - b);
        ASSERT_LE(normal_residual.norm(), 1e-10 * std::max(1.0, (a.transpose() * b).norm()));
    }
}
