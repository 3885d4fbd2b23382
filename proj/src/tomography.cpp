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

#include "quartit/tomography.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "quartit/error.hpp"

namespace quartit {

namespace {

using cd = std::complex<double>;

// One row of a protocol's linear system, in emission order.
struct RowPlan {
    int readout = -1; // -1 for the trailing single trace row
    int channel = 0;  // level or peak; unused for trace rows
    bool normalization = false;
};

std::vector<RowPlan> plan_rows(const TomographyProtocol &protocol, ObservationModel model) {
    std::vector<RowPlan> plan;
    const bool theoretical = model == ObservationModel::Theoretical;
    for (std::size_t r = 0; r < protocol.readouts.size(); ++r) {
        const int index = static_cast<int>(r);
        if (theoretical) {
            for (int level = 0; level < kLevels; ++level) {
                plan.push_back({index, level, false});
            }
        } else {
            for (int peak : protocol.readouts[r].peaks) {
                plan.push_back({index, peak, false});
            }
            if (protocol.normalization == Normalization::PerReadout) {
                plan.push_back({index, 0, true});
            }
        }
    }
    if (protocol.normalization == Normalization::Single) {
        plan.push_back({-1, 0, true});
    }
    return plan;
}

bool uses_deviation(const TomographyProtocol &protocol, ObservationModel model) {
    return model == ObservationModel::Cyclops && protocol.target != Target::OffDiagonal;
}

bool is_population(int component) {
    return std::find(kPopulationIndex.begin(), kPopulationIndex.end(), component) != kPopulationIndex.end();
}

double resolve_scaling(const TomographyProtocol &protocol, ObservationModel model,
                       std::optional<double> scaling) {
    const double s = scaling.value_or(default_scaling(protocol, model));
    if (!std::isfinite(s) || s <= 0.0) {
        throw Error(ErrorCode::InvalidInput, "scaling s must be positive and finite");
    }
    return s;
}

cd i_power(int k) {
    switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
    }
}

} // namespace

RealVector CoefficientMatrix::gram_spectrum() const { return linalg::svd(gram()).singular_values; }

double CoefficientMatrix::kappa() const { return linalg::condition_number_spectral(gram()); }

double CoefficientMatrix::kappa_a() const { return linalg::condition_number_spectral(a); }

RealVector CoefficientMatrix::unknowns(const DensityMatrix &rho) const {
    const StateVectorX x = vec(rho);
    RealVector out(static_cast<Eigen::Index>(columns.size()));
    for (std::size_t j = 0; j < columns.size(); ++j) {
        const int k = columns[j];
        out(static_cast<Eigen::Index>(j)) = x(k) - ((deviation_form && is_population(k)) ? 0.25 : 0.0);
    }
    return out;
}

CoefficientMatrix build_coefficient_matrix(const TomographyProtocol &protocol, ObservationModel model,
                                           std::optional<double> scaling) {
    protocol.validate();
    CoefficientMatrix out;
    out.scaling_s = resolve_scaling(protocol, model, scaling);
    out.columns = protocol.columns();
    out.deviation_form = uses_deviation(protocol, model);

    const auto plan = plan_rows(protocol, model);
    const auto cols = static_cast<Eigen::Index>(out.columns.size());
    out.a = RealMatrix::Zero(static_cast<Eigen::Index>(plan.size()), cols);

    std::vector<UnitaryGate> rotations;
    rotations.reserve(protocol.readouts.size());
    for (const auto &readout : protocol.readouts) {
        rotations.push_back(readout.sequence.unitary());
    }

    for (std::size_t i = 0; i < plan.size(); ++i) {
        const auto &row = plan[i];
        const auto r = static_cast<Eigen::Index>(i);
        out.normalization_mask.push_back(row.normalization);
        if (row.normalization) {
            for (Eigen::Index j = 0; j < cols; ++j) {
                out.a(r, j) = is_population(out.columns[static_cast<std::size_t>(j)]) ? out.scaling_s : 0.0;
            }
            ++out.normalization_rows;
            out.row_labels.push_back(row.readout < 0 ? "trace"
                                                     : "trace | " + protocol.readouts[static_cast<std::size_t>(
                                                                        row.readout)]
                                                                        .sequence.to_string());
            continue;
        }
        const auto &rotation = rotations[static_cast<std::size_t>(row.readout)];
        const ReadoutFunctional functional = readout_functional(model, rotation, row.channel);
        for (Eigen::Index j = 0; j < cols; ++j) {
            // cos(pi/2) residue would otherwise show up as 1e-33 entries.
            const double v = functional(out.columns[static_cast<std::size_t>(j)]);
            out.a(r, j) = std::abs(v) < 1e-15 ? 0.0 : v;
        }
        const std::string channel = model == ObservationModel::Theoretical ? "level " : "peak ";
        out.row_labels.push_back(protocol.readouts[static_cast<std::size_t>(row.readout)].sequence.to_string() +
                                 " | " + channel + std::to_string(row.channel));
    }
    return out;
}

double protocol_kappa(const TomographyProtocol &protocol, ObservationModel model, std::optional<double> scaling) {
    return build_coefficient_matrix(protocol, model, scaling).kappa();
}

RealVector simulate_observations(const DensityMatrix &rho, const TomographyProtocol &protocol,
                                 ObservationModel model, std::optional<double> scaling) {
    validate_density_matrix(rho, 1e-9);
    protocol.validate();
    const double s = resolve_scaling(protocol, model, scaling);
    const bool deviation = uses_deviation(protocol, model);
    const auto plan = plan_rows(protocol, model);

    std::vector<DensityMatrix> rotated;
    rotated.reserve(protocol.readouts.size());
    for (const auto &readout : protocol.readouts) {
        rotated.push_back(readout.sequence.unitary().apply(rho));
    }

    RealVector b(static_cast<Eigen::Index>(plan.size()));
    for (std::size_t i = 0; i < plan.size(); ++i) {
        const auto &row = plan[i];
        double value = 0.0;
        if (row.normalization) {
            value = deviation ? 0.0 : s * rho.trace().real();
        } else {
            value = model_readout(model, rotated[static_cast<std::size_t>(row.readout)], row.channel);
        }
        b(static_cast<Eigen::Index>(i)) = value;
    }
    return b;
}

RealVector simulate_observations(const DensityMatrix &rho, const TomographyProtocol &protocol,
                                 ObservationModel model, double noise_sigma, std::mt19937_64 &rng,
                                 std::optional<double> scaling) {
    const RealVector clean = simulate_observations(rho, protocol, model, scaling);
    if (noise_sigma == 0.0) {
        return clean;
    }
    return add_measurement_noise(clean, build_coefficient_matrix(protocol, model, scaling), noise_sigma, rng);
}

RealVector add_measurement_noise(const RealVector &b, const CoefficientMatrix &matrix, double sigma,
                                 std::mt19937_64 &rng) {
    if (!std::isfinite(sigma) || sigma < 0.0) {
        throw Error(ErrorCode::InvalidInput, "noise sigma must be finite and nonnegative");
    }
    if (b.size() != matrix.a.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "observation vector has " + std::to_string(b.size()) +
                                                      " rows, expected " + std::to_string(matrix.a.rows()));
    }
    RealVector out = b;
    if (sigma == 0.0) {
        return out;
    }
    std::normal_distribution<double> noise(0.0, sigma);
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        if (!matrix.normalization_mask[static_cast<std::size_t>(i)]) {
            out(i) += noise(rng);
        }
    }
    return out;
}

ReconstructionResult reconstruct(const RealVector &b, const CoefficientMatrix &matrix) {
    if (b.size() != matrix.a.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "observation vector has " + std::to_string(b.size()) +
                                                      " rows, expected " + std::to_string(matrix.a.rows()));
    }
    ReconstructionResult out;
    out.unknowns_hat = linalg::least_squares_solve(matrix.a, b);
    out.residual_norm = (matrix.a * out.unknowns_hat - b).norm();
    out.kappa = matrix.kappa();
    out.x_hat = StateVectorX::Zero();
    for (std::size_t j = 0; j < matrix.columns.size(); ++j) {
        const int k = matrix.columns[j];
        out.x_hat(k) = out.unknowns_hat(static_cast<Eigen::Index>(j)) +
                       ((matrix.deviation_form && is_population(k)) ? 0.25 : 0.0);
    }
    out.rho_hat = unvec(out.x_hat);
    return out;
}

ReconstructionResult reconstruct(const RealVector &b, const TomographyProtocol &protocol, ObservationModel model,
                                 std::optional<double> scaling) {
    return reconstruct(b, build_coefficient_matrix(protocol, model, scaling));
}

ErrorBoundReport error_bound(const CoefficientMatrix &matrix, const RealVector &x_true, const RealVector &x_hat,
                             const RealVector &b_true, const RealVector &b_noisy) {
    if (x_true.size() != matrix.a.cols() || x_hat.size() != matrix.a.cols() || b_true.size() != matrix.a.rows() ||
        b_noisy.size() != matrix.a.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "error bound inputs do not match the coefficient matrix");
    }
    ErrorBoundReport out;
    out.kappa = matrix.kappa();
    const double x_norm = x_true.norm();
    const double bt_norm = (matrix.a.transpose() * b_true).norm();
    if (x_norm == 0.0 || bt_norm == 0.0) {
        throw Error(ErrorCode::InvalidInput, "error bound undefined for a zero state or zero data");
    }
    out.relative_error = (x_hat - x_true).norm() / x_norm;
    out.data_ratio = (matrix.a.transpose() * (b_noisy - b_true)).norm() / bt_norm;
    out.lower = out.data_ratio / out.kappa;
    out.upper = out.data_ratio * out.kappa;
    // Relative slack for rounding in the solve itself.
    constexpr double kSlack = 1e-10;
    constexpr double kFloor = 1e-12;
    out.holds = out.relative_error <= out.upper * (1.0 + kSlack) + kFloor &&
                out.relative_error >= out.lower * (1.0 - kSlack) - kFloor;
    return out;
}

double f_value(const DensityMatrix &rho, int m, int n, int k, int l) {
    const cd value = 0.5 * (rho(m, m) + i_power(k) * rho(m, n) + i_power(l) * rho(n, m) + rho(n, n));
    return value.real();
}

std::vector<PairFValues> f_values_from_theoretical_readouts(std::span<const Vector4d> readouts) {
    static constexpr std::array<std::array<int, 2>, 6> kPairs = {{{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}, {0, 3}}};
    if (readouts.size() != 2 * kPairs.size()) {
        throw Error(ErrorCode::DimensionMismatch,
                    "expected 12 theoretical readouts, got " + std::to_string(readouts.size()));
    }
    std::vector<PairFValues> out;
    for (std::size_t p = 0; p < kPairs.size(); ++p) {
        const int m = kPairs[p][0];
        const int n = kPairs[p][1];
        const Vector4d &after_y = readouts[2 * p];
        const Vector4d &after_x = readouts[2 * p + 1];
        out.push_back({m, n, after_y(n), after_y(m), after_x(n), after_x(m)});
    }
    return out;
}

Eigen::Matrix<double, 12, 1> direct_offdiagonal_extraction(std::span<const PairFValues> values) {
    Eigen::Matrix<double, 12, 1> out = Eigen::Matrix<double, 12, 1>::Zero();
    auto slot = [](int component) {
        const auto it = std::find(kCoherenceIndex.begin(), kCoherenceIndex.end(), component);
        return static_cast<Eigen::Index>(it - kCoherenceIndex.begin());
    };
    for (const auto &pair : values) {
        out(slot(component_index(pair.m, pair.n, false))) = 0.5 * (pair.f00 - pair.f22);
        out(slot(component_index(pair.m, pair.n, true))) = 0.5 * (pair.f31 - pair.f13);
    }
    return out;
}

ScalingResult optimize_scaling(const TomographyProtocol &protocol, ObservationModel model,
                               std::span<const double> s_grid) {
    if (s_grid.empty()) {
        throw Error(ErrorCode::InvalidInput, "scaling grid is empty");
    }
    if (protocol.normalization == Normalization::None) {
        throw Error(ErrorCode::InvalidInput, "protocol '" + protocol.name + "' has no trace row to scale");
    }
    std::vector<double> grid(s_grid.begin(), s_grid.end());
    for (double s : grid) {
        if (!std::isfinite(s) || s <= 0.0) {
            throw Error(ErrorCode::InvalidInput, "scaling grid values must be positive");
        }
    }
    std::sort(grid.begin(), grid.end());

    ScalingResult out;
    out.kappa_star = std::numeric_limits<double>::infinity();
    for (double s : grid) {
        const double kappa = protocol_kappa(protocol, model, s);
        out.sweep.push_back({s, kappa});
        if (out.sweep.size() == 1 || kappa < out.kappa_star * (1.0 - 1e-12)) {
            out.s_star = s;
            out.kappa_star = kappa;
        }
    }

    const CoefficientMatrix reference = build_coefficient_matrix(protocol, model, 1.0);
    for (Eigen::Index i = 0; i < reference.a.rows(); ++i) {
        if (reference.normalization_mask[static_cast<std::size_t>(i)]) {
            continue;
        }
        for (Eigen::Index j = 0; j < reference.a.cols(); ++j) {
            const double magnitude = std::abs(reference.a(i, j));
            out.heuristic_all_entries = std::max(out.heuristic_all_entries, magnitude);
            if (is_population(reference.columns[static_cast<std::size_t>(j)])) {
                out.heuristic_population = std::max(out.heuristic_population, magnitude);
            }
        }
    }
    if (out.heuristic_all_entries > 0.0) {
        out.kappa_at_heuristic_all = protocol_kappa(protocol, model, out.heuristic_all_entries);
    }
    if (out.heuristic_population > 0.0) {
        out.kappa_at_heuristic_population = protocol_kappa(protocol, model, out.heuristic_population);
    }
    return out;
}

std::vector<double> scaling_grid(double first, double last, double step) {
    if (!(step > 0.0) || !(first > 0.0) || last < first || !std::isfinite(last)) {
        throw Error(ErrorCode::InvalidInput, "scaling grid needs 0 < first <= last and step > 0");
    }
    const auto count = static_cast<long>(std::floor((last - first) / step + 1e-9)) + 1;
    std::vector<double> grid;
    grid.reserve(static_cast<std::size_t>(count));
    for (long i = 0; i < count; ++i) {
        grid.push_back(first + static_cast<double>(i) * step);
    }
    return grid;
}

std::string_view to_string(MatrixEquivalence equivalence) noexcept {
    switch (equivalence) {
    case MatrixEquivalence::Identical: return "identical";
    case MatrixEquivalence::RowSign: return "row_sign";
    case MatrixEquivalence::Spectrum: return "spectrum";
    case MatrixEquivalence::Different: return "different";
    }
    return "?";
}

MatrixEquivalence compare_coefficient_matrices(const CoefficientMatrix &lhs, const CoefficientMatrix &rhs,
                                               double tolerance) {
    if (lhs.a.rows() != rhs.a.rows() || lhs.a.cols() != rhs.a.cols()) {
        return MatrixEquivalence::Different;
    }
    if ((lhs.a - rhs.a).cwiseAbs().maxCoeff() <= tolerance) {
        return MatrixEquivalence::Identical;
    }
    bool row_sign = true;
    for (Eigen::Index i = 0; i < lhs.a.rows() && row_sign; ++i) {
        const double same = (lhs.a.row(i) - rhs.a.row(i)).cwiseAbs().maxCoeff();
        const double flipped = (lhs.a.row(i) + rhs.a.row(i)).cwiseAbs().maxCoeff();
        row_sign = std::min(same, flipped) <= tolerance;
    }
    if (row_sign) {
        return MatrixEquivalence::RowSign;
    }
    const RealVector a = lhs.gram_spectrum();
    const RealVector b = rhs.gram_spectrum();
    if ((a - b).cwiseAbs().maxCoeff() <= 1e-10 * std::max(1.0, a(0))) {
        return MatrixEquivalence::Spectrum;
    }
    return MatrixEquivalence::Different;
}

} // namespace quartit
