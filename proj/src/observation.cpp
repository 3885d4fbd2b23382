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

#include "quartit/observation.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <string>

#include "quartit/error.hpp"

namespace quartit {

namespace {

void check_peak(int peak) {
    if (peak < 1 || peak > 3) {
        throw Error(ErrorCode::InvalidInput, "peak " + std::to_string(peak) + " outside 1..3");
    }
}

double diagonal(const DensityMatrix &rho, int level) { return rho(level, level).real(); }

} // namespace

std::string_view to_string(ObservationModel model) noexcept {
    switch (model) {
    case ObservationModel::Theoretical: return "theoretical";
    case ObservationModel::IdealExperimental: return "ideal";
    case ObservationModel::Cyclops: return "cyclops";
    }
    return "?";
}

ObservationModel parse_observation_model(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "theoretical") return ObservationModel::Theoretical;
    if (lower == "ideal" || lower == "ideal_experimental" || lower == "idealexperimental") {
        return ObservationModel::IdealExperimental;
    }
    if (lower == "cyclops") return ObservationModel::Cyclops;
    throw Error(ErrorCode::UnknownName, "unknown observation model '" + std::string(name) + "'");
}

int readout_channel_count(ObservationModel model) noexcept {
    return model == ObservationModel::Theoretical ? 4 : 3;
}

Vector4d theoretical_readout(const DensityMatrix &rho) { return rho.diagonal().real(); }

double ideal_peak_readout(const DensityMatrix &rho, int peak) {
    check_peak(peak);
    return diagonal(rho, peak) - diagonal(rho, peak - 1);
}

const Matrix4d &cyclops_pulse_matrix() {
    static const Matrix4d e = [] {
        const double z = std::sqrt(3.0);
        const double c1 = std::cos(std::numbers::pi / 40.0);
        const double c3 = std::cos(3.0 * std::numbers::pi / 40.0);
        const double s1 = std::sin(std::numbers::pi / 40.0);
        const double s3 = std::sin(3.0 * std::numbers::pi / 40.0);
        auto c = [&](double x, double y) { return x * c1 + y * c3; };
        auto s = [&](double x, double y) { return x * s1 + y * s3; };
        Matrix4d m;
        m << c(3, 1), s(z, z), c(z, -z), s(3, -1),
             s(z, z), c(1, 3), s(-1, 3), c(z, -z),
             c(z, -z), s(-1, 3), c(1, 3), s(z, z),
             s(3, -1), c(z, -z), s(z, z), c(3, 1);
        return Matrix4d(m / 4.0);
    }();
    return e;
}

const Eigen::Matrix<double, 3, 4> &cyclops_v_matrix() {
    static const Eigen::Matrix<double, 3, 4> v = [] {
        const Matrix4d &m = cyclops_pulse_matrix();
        // 1-based accessor to keep the products readable.
        auto e = [&](int i, int j) { return m(i - 1, j - 1); };
        const double z = std::sqrt(3.0);
        Eigen::Matrix<double, 3, 4> out;
        out << z * e(1, 1) * e(1, 2), -z * e(1, 2) * e(2, 2), -z * e(2, 3) * e(1, 3), -z * e(1, 3) * e(1, 4),
               2 * e(1, 3) * e(1, 2), 2 * e(2, 2) * e(2, 3), -2 * e(2, 3) * e(2, 2), -2 * e(1, 3) * e(1, 2),
               z * e(1, 3) * e(1, 4), z * e(1, 3) * e(2, 3), z * e(1, 2) * e(2, 2), -z * e(1, 1) * e(1, 2);
        return out;
    }();
    return v;
}

double cyclops_readout(const DensityMatrix &rho, int peak) {
    check_peak(peak);
    const Vector4d deviation = rho.diagonal().real().array() - 0.25;
    return cyclops_v_matrix().row(peak - 1).dot(deviation);
}

double model_readout(ObservationModel model, const DensityMatrix &rho, int channel) {
    switch (model) {
    case ObservationModel::Theoretical:
        if (channel < 0 || channel >= kLevels) {
            throw Error(ErrorCode::InvalidInput,
                        "level " + std::to_string(channel) + " outside 0..3");
        }
        return diagonal(rho, channel);
    case ObservationModel::IdealExperimental: return ideal_peak_readout(rho, channel);
    case ObservationModel::Cyclops: return cyclops_readout(rho, channel);
    }
    throw Error(ErrorCode::InvalidInput, "invalid observation model");
}

ReadoutFunctional readout_functional(ObservationModel model, const UnitaryGate &rotation, int channel) {
    ReadoutFunctional row;
    const auto &basis = hermitian_basis();
    for (int k = 0; k < kStateDim; ++k) {
        const Matrix4c rotated = rotation.apply(basis[static_cast<std::size_t>(k)]);
        if (model == ObservationModel::Cyclops) {
            check_peak(channel);
            row(k) = cyclops_v_matrix().row(channel - 1).dot(rotated.diagonal().real());
        } else {
            row(k) = model_readout(model, rotated, channel);
        }
    }
    return row;
}

} // namespace quartit
