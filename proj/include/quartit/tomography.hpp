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

#pragma once

/**
 * @file
 * Protocol catalog, coefficient-matrix assembly, condition numbers and
 * linear state reconstruction.
 */

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "quartit/linalg.hpp"
#include "quartit/observation.hpp"
#include "quartit/pulse_sequence.hpp"
#include "quartit/state_vector.hpp"

namespace quartit {

enum class Target { Diagonal, OffDiagonal, Full };
enum class Normalization {
    None,
    Single,     ///< one trace row after all readouts
    PerReadout, ///< one trace row per readout (experimental models only)
};

[[nodiscard]] std::string_view to_string(Target target) noexcept;
[[nodiscard]] std::string_view to_string(Normalization normalization) noexcept;

/// One rotated readout: the pulse sequence and the peaks measured after it.
/// Peaks are ignored under the Theoretical model, which reads all levels.
struct Readout {
    PulseSequence sequence;
    std::vector<int> peaks;
};

struct TomographyProtocol {
    std::string name;
    std::string description;
    std::vector<Readout> readouts;
    Target target = Target::Full;
    Normalization normalization = Normalization::None;
    double cyclops_scaling = 1.0; ///< default s under the Cyclops model

    /// StateVectorX indices of the unknowns, in order.
    [[nodiscard]] std::vector<int> columns() const;
    /// Throws Error(InvalidSpec) on an empty readout list or bad peaks.
    void validate() const;
};

[[nodiscard]] const std::vector<TomographyProtocol> &protocol_catalog();
[[nodiscard]] const TomographyProtocol &protocol_catalog(std::string_view name);

/// s used when none is given: 1, except the protocol's Cyclops value under Cyclops.
[[nodiscard]] double default_scaling(const TomographyProtocol &protocol, ObservationModel model);

struct CoefficientMatrix {
    RealMatrix a;
    std::vector<std::string> row_labels;
    std::vector<int> columns;
    int normalization_rows = 0;
    /// True for trace rows, false for measured rows.
    std::vector<bool> normalization_mask;
    /// Unknowns are rho - I/4 on the population columns (Cyclops).
    bool deviation_form = false;
    double scaling_s = 1.0;

    [[nodiscard]] bool includes_normalization_row() const noexcept { return normalization_rows > 0; }
    [[nodiscard]] RealMatrix gram() const { return linalg::normal_matrix(a); }
    /// Sorted singular values of A^T A.
    [[nodiscard]] RealVector gram_spectrum() const;
    /// kappa(A^T A); +infinity when singular.
    [[nodiscard]] double kappa() const;
    /// kappa(A).
    [[nodiscard]] double kappa_a() const;
    /// Unknown vector for a state: selected columns of vec(rho), shifted to
    /// the deviation when deviation_form is set.
    [[nodiscard]] RealVector unknowns(const DensityMatrix &rho) const;
};

[[nodiscard]] CoefficientMatrix build_coefficient_matrix(const TomographyProtocol &protocol,
                                                         ObservationModel model,
                                                         std::optional<double> scaling = {});

[[nodiscard]] double protocol_kappa(const TomographyProtocol &protocol, ObservationModel model,
                                    std::optional<double> scaling = {});

/// Forward model: readouts of the rotated states, trace rows s Tr(rho) (0 in
/// deviation form), plus N(0, noise_sigma^2) on measured rows only.
[[nodiscard]] RealVector simulate_observations(const DensityMatrix &rho, const TomographyProtocol &protocol,
                                               ObservationModel model, double noise_sigma,
                                               std::mt19937_64 &rng, std::optional<double> scaling = {});
[[nodiscard]] RealVector simulate_observations(const DensityMatrix &rho, const TomographyProtocol &protocol,
                                               ObservationModel model, std::optional<double> scaling = {});

/// Adds N(0, sigma^2) noise to the measured rows of b.
[[nodiscard]] RealVector add_measurement_noise(const RealVector &b, const CoefficientMatrix &matrix,
                                               double sigma, std::mt19937_64 &rng);

/// Components of x outside the protocol's columns are reported as 0.
struct ReconstructionResult {
    DensityMatrix rho_hat;
    StateVectorX x_hat;
    RealVector unknowns_hat;
    double residual_norm = 0.0;
    double kappa = 0.0;
};

[[nodiscard]] ReconstructionResult reconstruct(const RealVector &b, const CoefficientMatrix &matrix);
[[nodiscard]] ReconstructionResult reconstruct(const RealVector &b, const TomographyProtocol &protocol,
                                               ObservationModel model, std::optional<double> scaling = {});

/// Two-sided error bound kappa^-1 r <= |dx|/|x| <= kappa r with r = |A^T db| / |A^T b|.
struct ErrorBoundReport {
    double relative_error = 0.0;
    double data_ratio = 0.0;
    double lower = 0.0;
    double upper = 0.0;
    double kappa = 0.0;
    bool holds = false;
};

/// x_true and x_hat are unknown vectors (CoefficientMatrix::unknowns), b_true
/// the noiseless data.
[[nodiscard]] ErrorBoundReport error_bound(const CoefficientMatrix &matrix, const RealVector &x_true,
                                           const RealVector &x_hat, const RealVector &b_true,
                                           const RealVector &b_noisy);

/// f_mn^(kl) = (rho_mm + i^k rho_mn + i^l rho_nm + rho_nn) / 2, real part.
[[nodiscard]] double f_value(const DensityMatrix &rho, int m, int n, int k, int l);

/// The four f-values that the X/Y half-pi pair on (m, n) exposes.
struct PairFValues {
    int m = 0;
    int n = 1;
    double f00 = 0.0;
    double f22 = 0.0;
    double f31 = 0.0;
    double f13 = 0.0;
};

/// Pulls the 24 f-values out of the 12 Theoretical readouts of the
/// offdiag_temp rotation set (Y then X per pair, pairs 01,12,23,02,13,03).
[[nodiscard]] std::vector<PairFValues> f_values_from_theoretical_readouts(std::span<const Vector4d> readouts);

/// 2 Re rho_mn = f00 - f22, 2 Im rho_mn = f31 - f13; returns the 12
/// coherences in kCoherenceIndex order. Missing pairs are left at 0.
[[nodiscard]] Eigen::Matrix<double, 12, 1> direct_offdiagonal_extraction(std::span<const PairFValues> values);

struct ScalingSweepPoint {
    double s = 0.0;
    double kappa = 0.0;
};

struct ScalingResult {
    double s_star = 0.0;
    double kappa_star = 0.0;
    /// max |A_ij| over measured rows, all columns.
    double heuristic_all_entries = 0.0;
    double kappa_at_heuristic_all = 0.0;
    /// max |A_ij| over measured rows, population columns only.
    double heuristic_population = 0.0;
    double kappa_at_heuristic_population = 0.0;
    std::vector<ScalingSweepPoint> sweep;
};

/// Grid search over s; ties within 1e-12 relative go to the smallest s.
/// Throws Error(InvalidInput) on an empty grid, nonpositive s or a
/// protocol without a normalization row.
[[nodiscard]] ScalingResult optimize_scaling(const TomographyProtocol &protocol, ObservationModel model,
                                             std::span<const double> s_grid);

/// Evenly spaced grid from `first` to `last` inclusive.
[[nodiscard]] std::vector<double> scaling_grid(double first, double last, double step);

enum class MatrixEquivalence { Identical, RowSign, Spectrum, Different };
[[nodiscard]] std::string_view to_string(MatrixEquivalence equivalence) noexcept;

/// Strongest relation between two coefficient matrices: entrywise equal,
/// equal up to per-row sign, or equal A^T A spectra (relative 1e-10).
[[nodiscard]] MatrixEquivalence compare_coefficient_matrices(const CoefficientMatrix &lhs,
                                                             const CoefficientMatrix &rhs,
                                                             double tolerance = 1e-12);

} // namespace quartit
