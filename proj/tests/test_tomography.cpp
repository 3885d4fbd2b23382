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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "quartit/error.hpp"
#include "quartit/tomography.hpp"

using namespace quartit;

namespace {

using Model = ObservationModel;

const Model kModels[] = {Model::Theoretical, Model::IdealExperimental, Model::Cyclops};

// True when every row of `a` equals, up to sign, a distinct row of `b`.
bool same_rows_up_to_sign_and_order(const RealMatrix &a, const RealMatrix &b, double tol = 1e-12) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    std::vector<bool> used(static_cast<std::size_t>(b.rows()), false);
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        bool found = false;
        for (Eigen::Index j = 0; j < b.rows() && !found; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            const double d = std::min((a.row(i) - b.row(j)).cwiseAbs().maxCoeff(),
                                      (a.row(i) + b.row(j)).cwiseAbs().maxCoeff());
            if (d <= tol) {
                used[static_cast<std::size_t>(j)] = true;
                found = true;
            }
        }
        if (!found) return false;
    }
    return true;
}

TomographyProtocol custom(std::vector<Readout> readouts, Target target, Normalization normalization) {
    TomographyProtocol p;
    p.name = "custom";
    p.readouts = std::move(readouts);
    p.target = target;
    p.normalization = normalization;
    return p;
}

} // namespace

TEST(Catalog, Entries) {
    for (const char *name : {"diag_temp1", "diag_temp2", "diag_temp3", "diag_opt1", "diag_opt2", "offdiag_temp",
                             "offdiag_opt0", "offdiag_opt1", "offdiag_opt2", "full_opt1", "full_opt2"}) {
        EXPECT_NO_THROW((void)protocol_catalog(name)) << name;
    }
    EXPECT_THROW((void)protocol_catalog("diag_opt3"), Error);

    const auto &d1 = protocol_catalog("diag_opt1");
    ASSERT_EQ(d1.readouts.size(), 6u);
    const char *expected[] = {"I", "S02", "S13 S02", "S13", "S12", "S03"};
    for (std::size_t i = 0; i < 6; ++i) {
        EXPECT_EQ(d1.readouts[i].sequence.to_string(), expected[i]);
        EXPECT_EQ(d1.readouts[i].peaks, std::vector<int>{1});
    }
    EXPECT_EQ(d1.normalization, Normalization::Single);
    EXPECT_DOUBLE_EQ(default_scaling(d1, Model::Cyclops), 0.2318);
    EXPECT_DOUBLE_EQ(default_scaling(d1, Model::IdealExperimental), 1.0);

    const auto &o2 = protocol_catalog("offdiag_opt2");
    ASSERT_EQ(o2.readouts.size(), 12u);
    for (const auto &r : o2.readouts) EXPECT_EQ(r.peaks, std::vector<int>{2});
    EXPECT_EQ(o2.readouts[0].sequence.to_string(), "Y12 S02");
    // Written product: S02 acts first.
    EXPECT_EQ(o2.readouts[0].sequence.pulses().front(), (SelectiveRotationSpec{Axis::Y, 0, 2, std::numbers::pi}));

    const auto &o0 = protocol_catalog("offdiag_opt0");
    std::vector<int> peaks;
    for (const auto &r : o0.readouts) peaks.push_back(r.peaks.front());
    EXPECT_EQ(peaks, (std::vector<int>{1, 1, 2, 2, 3, 3, 1, 1, 2, 2, 1, 1}));

    const auto &f1 = protocol_catalog("full_opt1");
    EXPECT_EQ(f1.readouts.size(), 18u);
    EXPECT_EQ(build_coefficient_matrix(f1, Model::IdealExperimental).a.rows(), 19);
    EXPECT_EQ(build_coefficient_matrix(f1, Model::IdealExperimental).a.cols(), 16);
}

TEST(CoefficientMatrix, DiagonalTemplates) {
    const auto m1 = build_coefficient_matrix(protocol_catalog("diag_temp1"), Model::IdealExperimental);
    RealMatrix expected(4, 4);
    expected << -1, 1, 0, 0, 0, -1, 1, 0, 0, 0, -1, 1, 1, 1, 1, 1;
    EXPECT_EQ(m1.a, expected);
    EXPECT_NEAR(m1.kappa(), 4 + 2 * std::sqrt(2.0), 1e-12);

    const auto m2 = build_coefficient_matrix(protocol_catalog("diag_temp2"), Model::IdealExperimental);
    ASSERT_EQ(m2.a.rows(), 5);
    EXPECT_EQ(RealVector(m2.a.row(3).transpose()), Eigen::Vector4d(-1, 0, 0, 1));
    EXPECT_NEAR(m2.kappa(), 2.0, 1e-12);
}

TEST(CoefficientMatrix, DiagonalOptimalIsOrthogonal) {
    for (const char *name : {"diag_opt1", "diag_opt2"}) {
        const auto m = build_coefficient_matrix(protocol_catalog(name), Model::IdealExperimental, 1.0);
        EXPECT_LE((m.gram() - 4.0 * RealMatrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 1e-12) << name;
    }
    RealMatrix expected_rows(7, 4);
    expected_rows << -1, 1, 0, 0, 0, 1, -1, 0, 0, 0, -1, 1, -1, 0, 0, 1, -1, 0, 1, 0, 0, 1, 0, -1, 1, 1, 1, 1;
    const auto m = build_coefficient_matrix(protocol_catalog("diag_opt1"), Model::IdealExperimental, 1.0);
    EXPECT_TRUE(same_rows_up_to_sign_and_order(m.a, expected_rows));
}

TEST(CoefficientMatrix, OffDiagonalOpt1Pattern) {
    // Signed permutation matrix scaled by 2, rows in catalog order.
    const int col_of_row[12] = {0, 1, 6, 7, 10, 11, 2, 3, 8, 9, 4, 5};
    const int sign_of_row[12] = {1, 1, -1, -1, 1, 1, -1, -1, 1, 1, -1, -1};
    RealMatrix expected = RealMatrix::Zero(12, 12);
    for (int r = 0; r < 12; ++r) expected(r, col_of_row[r]) = 2.0 * sign_of_row[r];
    const auto m = build_coefficient_matrix(protocol_catalog("offdiag_opt1"), Model::IdealExperimental);
    ASSERT_EQ(m.a.rows(), 12);
    for (int r = 0; r < 12; ++r) {
        const double d = std::min((m.a.row(r) - expected.row(r)).cwiseAbs().maxCoeff(),
                                  (m.a.row(r) + expected.row(r)).cwiseAbs().maxCoeff());
        EXPECT_LE(d, 1e-12) << "row " << r;
    }
}

TEST(CoefficientMatrix, CyclopsTemplateIsVPlusTraceRow) {
    const double s = 0.37;
    const auto m = build_coefficient_matrix(protocol_catalog("diag_temp3"), Model::Cyclops, s);
    EXPECT_TRUE(m.deviation_form);
    EXPECT_LE((m.a.topRows(3) - RealMatrix(cyclops_v_matrix())).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_EQ(RealVector(m.a.row(3).transpose()), Eigen::Vector4d::Constant(s));
}

TEST(CoefficientMatrix, NormalizationRowShape) {
    for (const auto &p : protocol_catalog()) {
        for (Model model : kModels) {
            const auto m = build_coefficient_matrix(p, model, 0.5);
            ASSERT_EQ(m.normalization_mask.size(), static_cast<std::size_t>(m.a.rows()));
            for (Eigen::Index i = 0; i < m.a.rows(); ++i) {
                if (!m.normalization_mask[static_cast<std::size_t>(i)]) continue;
                for (std::size_t j = 0; j < m.columns.size(); ++j) {
                    const bool population = std::find(kPopulationIndex.begin(), kPopulationIndex.end(),
                                                      m.columns[j]) != kPopulationIndex.end();
                    ASSERT_EQ(m.a(i, static_cast<Eigen::Index>(j)), population ? 0.5 : 0.0);
                }
            }
        }
    }
}

TEST(CoefficientMatrixProperty, KappaInvariantUnderRowScalingAndPermutation) {
    std::mt19937_64 rng(41);
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    for (const auto &p : protocol_catalog()) {
        for (Model model : kModels) {
            const auto m = build_coefficient_matrix(p, model);
            const double kappa = m.kappa();
            if (std::isinf(kappa)) continue;
            std::vector<Eigen::Index> order(static_cast<std::size_t>(m.a.rows()));
            std::iota(order.begin(), order.end(), Eigen::Index{0});
            std::shuffle(order.begin(), order.end(), rng);
            const double c = scale(rng);
            RealMatrix permuted(m.a.rows(), m.a.cols());
            for (Eigen::Index i = 0; i < m.a.rows(); ++i) {
                permuted.row(i) = c * m.a.row(order[static_cast<std::size_t>(i)]);
            }
            const double k2 = linalg::condition_number_spectral(linalg::normal_matrix(permuted));
            ASSERT_NEAR(k2, kappa, 1e-9 * kappa) << p.name << " " << to_string(model);
        }
    }
}

TEST(CoefficientMatrixProperty, EquivalentOptimalSchemes) {
    const auto d1 = build_coefficient_matrix(protocol_catalog("diag_opt1"), Model::IdealExperimental);
    const auto d2 = build_coefficient_matrix(protocol_catalog("diag_opt2"), Model::IdealExperimental);
    EXPECT_LE((d1.gram_spectrum() - d2.gram_spectrum()).cwiseAbs().maxCoeff(), 1e-12);
    const auto o0 = build_coefficient_matrix(protocol_catalog("offdiag_opt0"), Model::IdealExperimental);
    const auto o1 = build_coefficient_matrix(protocol_catalog("offdiag_opt1"), Model::IdealExperimental);
    const auto o2 = build_coefficient_matrix(protocol_catalog("offdiag_opt2"), Model::IdealExperimental);
    EXPECT_LE((o0.gram_spectrum() - o1.gram_spectrum()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE((o1.gram_spectrum() - o2.gram_spectrum()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_EQ(compare_coefficient_matrices(o1, o1), MatrixEquivalence::Identical);
    EXPECT_EQ(compare_coefficient_matrices(o0, o1), MatrixEquivalence::RowSign);
    EXPECT_EQ(compare_coefficient_matrices(d1, o1), MatrixEquivalence::Different);
}

TEST(CoefficientMatrixProperty, FullOptimalGramIsScaledIdentity) {
    for (const char *name : {"full_opt1", "full_opt2"}) {
        const auto m = build_coefficient_matrix(protocol_catalog(name), Model::IdealExperimental);
        const RealMatrix gram = m.gram();
        const double c = gram(0, 0);
        EXPECT_GT(c, 0.0);
        EXPECT_LE((gram - c * RealMatrix::Identity(16, 16)).cwiseAbs().maxCoeff(), 1e-12) << name;
    }
}

TEST(Simulate, MaximallyMixedGivesZeroPeaks) {
    const DensityMatrix mixed = Matrix4c::Identity() / 4.0;
    for (const auto &p : protocol_catalog()) {
        for (Model model : {Model::IdealExperimental, Model::Cyclops}) {
            const auto m = build_coefficient_matrix(p, model);
            const RealVector b = simulate_observations(mixed, p, model);
            for (Eigen::Index i = 0; i < b.size(); ++i) {
                const double expected = m.normalization_mask[static_cast<std::size_t>(i)]
                                            ? (model == Model::Cyclops && p.target != Target::OffDiagonal ? 0.0
                                                                                                           : m.scaling_s)
                                            : 0.0;
                ASSERT_NEAR(b(i), expected, 1e-15) << p.name << " row " << i;
            }
        }
    }
}

TEST(Simulate, GroundStateUnderDiagOpt1) {
    DensityMatrix ground = Matrix4c::Zero();
    ground(0, 0) = 1.0;
    RealMatrix expected_rows(7, 4);
    expected_rows << -1, 1, 0, 0, 0, 1, -1, 0, 0, 0, -1, 1, -1, 0, 0, 1, -1, 0, 1, 0, 0, 1, 0, -1, 1, 1, 1, 1;
    const RealVector derived = expected_rows * Eigen::Vector4d(1, 0, 0, 0);
    EXPECT_EQ(derived, (RealVector(7) << -1, 0, 0, -1, -1, 0, 1).finished());

    const auto &p = protocol_catalog("diag_opt1");
    const RealVector b = simulate_observations(ground, p, Model::IdealExperimental);
    const auto m = build_coefficient_matrix(p, Model::IdealExperimental);
    EXPECT_LE((m.a * m.unknowns(ground) - b).cwiseAbs().maxCoeff(), 1e-15);
    // Same multiset of values up to sign, row order being a convention.
    std::vector<double> ours(b.data(), b.data() + b.size());
    std::vector<double> theirs(derived.data(), derived.data() + derived.size());
    for (auto &v : ours) v = std::abs(v);
    for (auto &v : theirs) v = std::abs(v);
    std::sort(ours.begin(), ours.end());
    std::sort(theirs.begin(), theirs.end());
    for (std::size_t i = 0; i < ours.size(); ++i) EXPECT_NEAR(ours[i], theirs[i], 1e-15);
}

TEST(SimulateProperty, ForwardConsistency) {
    for (const auto &p : protocol_catalog()) {
        for (Model model : kModels) {
            const auto m = build_coefficient_matrix(p, model);
            for (std::uint64_t seed = 0; seed < 10; ++seed) {
                const DensityMatrix rho = random_density_matrix(seed, PurityMode::Mixed);
                const RealVector b = simulate_observations(rho, p, model);
                // Reduced-column protocols see the dropped components as a bias;
                // compare against the full 16-column row set instead.
                TomographyProtocol full = p;
                full.target = Target::Full;
                const auto mf = build_coefficient_matrix(full, model);
                ASSERT_EQ(mf.a.rows(), m.a.rows());
                ASSERT_LE((mf.a * mf.unknowns(rho) - b).cwiseAbs().maxCoeff(), 1e-12) << p.name;
            }
        }
    }
}

TEST(Simulate, NoiseOnlyOnMeasuredRows) {
    const auto &p = protocol_catalog("full_opt1");
    const DensityMatrix rho = random_density_matrix(3, PurityMode::Mixed);
    std::mt19937_64 rng(5);
    const RealVector clean = simulate_observations(rho, p, Model::IdealExperimental);
    const RealVector noisy = simulate_observations(rho, p, Model::IdealExperimental, 0.1, rng);
    EXPECT_EQ(noisy(18), clean(18));
    EXPECT_GT((noisy - clean).head(18).cwiseAbs().minCoeff(), 0.0);
    EXPECT_THROW((void)simulate_observations(rho, p, Model::IdealExperimental, -1.0, rng), Error);
}

TEST(Reconstruct, RoundTripFullProtocols) {
    for (const char *name : {"full_opt1", "full_opt2", "offdiag_temp"}) {
        const auto &p = protocol_catalog(name);
        for (Model model : kModels) {
            const auto m = build_coefficient_matrix(p, model);
            if (std::isinf(m.kappa())) continue;
            const double tol = model == Model::Cyclops ? 1e-8 : 1e-10;
            for (std::uint64_t seed = 0; seed < 100; ++seed) {
                const DensityMatrix rho = random_density_matrix(seed, PurityMode::Mixed);
                const auto result = reconstruct(simulate_observations(rho, p, model), m);
                ASSERT_LE((result.rho_hat - rho).cwiseAbs().maxCoeff(), tol) << name << " " << to_string(model);
                ASSERT_NEAR(result.rho_hat.trace().real(), 1.0, 1e-9);
            }
        }
    }
}

TEST(Reconstruct, MaximallyMixed) {
    const DensityMatrix mixed = Matrix4c::Identity() / 4.0;
    for (const char *name : {"full_opt1", "full_opt2"}) {
        for (Model model : kModels) {
            const auto &p = protocol_catalog(name);
            const auto result = reconstruct(simulate_observations(mixed, p, model), p, model);
            EXPECT_LE((result.rho_hat - mixed).cwiseAbs().maxCoeff(), 1e-10);
        }
    }
}

TEST(Reconstruct, DiagonalProtocolFillsPopulationsOnly) {
    const DensityMatrix rho = random_density_matrix(44, PurityMode::Mixed);
    for (Model model : {Model::IdealExperimental, Model::Cyclops}) {
        const auto &p = protocol_catalog("diag_opt2");
        const auto result = reconstruct(simulate_observations(rho, p, model), p, model);
        for (int k = 0; k < 4; ++k) {
            EXPECT_NEAR(result.rho_hat(k, k).real(), rho(k, k).real(), 1e-10);
        }
        EXPECT_EQ(result.rho_hat(0, 1), std::complex<double>(0.0, 0.0));
    }
}

TEST(Reconstruct, WrongLengthAndRankErrors) {
    const auto &p = protocol_catalog("full_opt1");
    const RealVector b = simulate_observations(random_density_matrix(1, PurityMode::Mixed), p, Model::IdealExperimental);
    try {
        (void)reconstruct(RealVector(b.head(17)), p, Model::IdealExperimental);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::DimensionMismatch);
        EXPECT_NE(std::string(e.what()).find("expected 19"), std::string::npos) << e.what();
    }
    const auto singular = custom({{PulseSequence::parse("I"), {1, 2, 3}}, {PulseSequence::parse("S23"), {1}}},
                                 Target::Diagonal, Normalization::None);
    try {
        (void)reconstruct(RealVector::Zero(4), singular, Model::IdealExperimental);
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::RankDeficient);
    }
    EXPECT_TRUE(std::isinf(protocol_kappa(singular, Model::IdealExperimental)));
}

TEST(ErrorBoundProperty, TwoSidedBoundHolds) {
    std::mt19937_64 rng(2718);
    for (const char *name : {"full_opt1", "full_opt2", "diag_temp1", "offdiag_temp"}) {
        for (Model model : {Model::IdealExperimental, Model::Cyclops}) {
            const auto &p = protocol_catalog(name);
            const auto m = build_coefficient_matrix(p, model);
            for (int trial = 0; trial < 200; ++trial) {
                const DensityMatrix rho = random_density_matrix(rng(), PurityMode::Mixed);
                const RealVector clean = simulate_observations(rho, p, model);
                const RealVector noisy = add_measurement_noise(clean, m, 1e-3, rng);
                const auto result = reconstruct(noisy, m);
                const auto bound = error_bound(m, m.unknowns(rho), result.unknowns_hat, clean, noisy);
                ASSERT_TRUE(bound.holds) << name << " " << to_string(model) << " rel " << bound.relative_error
                                         << " in [" << bound.lower << ", " << bound.upper << "]";
            }
        }
    }
}

TEST(FValues, LayoutOfRotatedPopulations) {
    const auto &p = protocol_catalog("offdiag_temp");
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        const DensityMatrix rho = random_density_matrix(rng(), PurityMode::Mixed);
        std::vector<Vector4d> readouts;
        for (const auto &r : p.readouts) readouts.push_back(theoretical_readout(r.sequence.unitary().apply(rho)));
        const auto pairs = f_values_from_theoretical_readouts(readouts);
        ASSERT_EQ(pairs.size(), 6u);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            const auto &f = pairs[k];
            ASSERT_NEAR(f.f00, f_value(rho, f.m, f.n, 0, 0), 1e-12);
            ASSERT_NEAR(f.f22, f_value(rho, f.m, f.n, 2, 2), 1e-12);
            ASSERT_NEAR(f.f31, f_value(rho, f.m, f.n, 3, 1), 1e-12);
            ASSERT_NEAR(f.f13, f_value(rho, f.m, f.n, 1, 3), 1e-12);
            // Levels outside the pair keep their populations.
            for (int level = 0; level < 4; ++level) {
                if (level == f.m || level == f.n) continue;
                ASSERT_NEAR(readouts[2 * k](level), rho(level, level).real(), 1e-12);
                ASSERT_NEAR(readouts[2 * k + 1](level), rho(level, level).real(), 1e-12);
            }
        }
    }
}

TEST(DirectExtraction, MatchesLeastSquares) {
    std::vector<PairFValues> flat;
    for (auto [m, n] : {std::pair{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}, {0, 3}}) {
        flat.push_back({m, n, 0.3, 0.3, 0.3, 0.3});
    }
    EXPECT_EQ(direct_offdiagonal_extraction(flat), (Eigen::Matrix<double, 12, 1>::Zero()));

    const auto &p = protocol_catalog("offdiag_temp");
    const auto m = build_coefficient_matrix(p, Model::Theoretical);
    ASSERT_EQ(m.a.rows(), 48);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const DensityMatrix rho = random_density_matrix(seed, PurityMode::Mixed);
        std::vector<Vector4d> readouts;
        for (const auto &r : p.readouts) readouts.push_back(theoretical_readout(r.sequence.unitary().apply(rho)));
        const auto pairs = f_values_from_theoretical_readouts(readouts);
        ASSERT_NEAR(pairs[0].f00 - pairs[0].f22, 2 * rho(0, 1).real(), 1e-12);
        const auto direct = direct_offdiagonal_extraction(pairs);
        const auto lsq = reconstruct(simulate_observations(rho, p, Model::Theoretical), m);
        for (std::size_t k = 0; k < kCoherenceIndex.size(); ++k) {
            ASSERT_NEAR(direct(static_cast<Eigen::Index>(k)), lsq.x_hat(kCoherenceIndex[k]), 1e-10);
            ASSERT_NEAR(direct(static_cast<Eigen::Index>(k)), vec(rho)(kCoherenceIndex[k]), 1e-12);
        }
    }
}

TEST(OptimizeScaling, CyclopsTemplatePlateau) {
    const auto grid = scaling_grid(0.11, 0.24, 0.01);
    const auto result = optimize_scaling(protocol_catalog("diag_temp3"), Model::Cyclops, grid);
    EXPECT_NEAR(result.kappa_star, 6.1375, 5e-4);
    EXPECT_GT(result.s_star, 0.1);
    EXPECT_LT(result.s_star, 0.25);
    for (const auto &point : result.sweep) {
        EXPECT_GE(point.kappa, result.kappa_star * (1 - 1e-12));
    }
}

TEST(OptimizeScaling, IdealOptimumAtOne) {
    const auto grid = scaling_grid(0.5, 2.0, 0.05);
    const auto result = optimize_scaling(protocol_catalog("diag_opt1"), Model::IdealExperimental, grid);
    EXPECT_NEAR(result.s_star, 1.0, 1e-12);
    EXPECT_NEAR(result.kappa_star, 1.0, 1e-12);
    EXPECT_DOUBLE_EQ(result.heuristic_all_entries, 1.0);
}

TEST(OptimizeScaling, ContinuityOnFinePercentSteps) {
    for (const char *name : {"diag_temp3", "diag_opt1", "full_opt1"}) {
        std::vector<double> grid;
        for (double s = 0.05; s < 2.0; s *= 1.01) grid.push_back(s);
        const auto result = optimize_scaling(protocol_catalog(name), Model::Cyclops, grid);
        for (std::size_t i = 1; i < result.sweep.size(); ++i) {
            const double a = result.sweep[i - 1].kappa;
            const double b = result.sweep[i].kappa;
            ASSERT_LT(std::abs(b - a), 0.1 * std::min(a, b)) << name << " s=" << result.sweep[i].s;
        }
        EXPECT_GT(result.sweep.back().kappa, result.kappa_star);
    }
}

TEST(OptimizeScaling, HeuristicCandidates) {
    const auto grid = scaling_grid(0.2, 0.5, 0.01);
    const auto result = optimize_scaling(protocol_catalog("full_opt1"), Model::Cyclops, grid);
    EXPECT_NEAR(result.heuristic_all_entries, 0.4608, 5e-4);
    EXPECT_NEAR(result.heuristic_population, 0.2318, 5e-4);
    EXPECT_LT(result.kappa_at_heuristic_population, 1.1);
    EXPECT_GT(result.kappa_at_heuristic_all, result.kappa_at_heuristic_population);
}

TEST(OptimizeScaling, SweepIsSortedWhateverTheGridOrder) {
    const std::vector<double> grid = {0.4, 0.3, 0.3, 0.5, 0.2};
    const auto result = optimize_scaling(protocol_catalog("diag_opt1"), Model::Cyclops, grid);
    ASSERT_FALSE(result.sweep.empty());
    for (std::size_t i = 1; i < result.sweep.size(); ++i) {
        EXPECT_LE(result.sweep[i - 1].s, result.sweep[i].s);
    }
    EXPECT_EQ(result.sweep.front().s, 0.2);
}

TEST(OptimizeScaling, Errors) {
    const std::vector<double> empty;
    EXPECT_THROW((void)optimize_scaling(protocol_catalog("diag_opt1"), Model::Cyclops, empty), Error);
    const std::vector<double> negative = {0.1, -0.2};
    EXPECT_THROW((void)optimize_scaling(protocol_catalog("diag_opt1"), Model::Cyclops, negative), Error);
    const std::vector<double> ok = {0.1};
    EXPECT_THROW((void)optimize_scaling(protocol_catalog("offdiag_opt1"), Model::Cyclops, ok), Error);
    EXPECT_THROW((void)scaling_grid(0.5, 0.1, 0.1), Error);
}
