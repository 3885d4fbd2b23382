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
 * Longitudinal-magnetization readout models. Each readout is a real-linear
 * functional on Hermitian 4x4 matrices and is stored as a row over the
 * StateVectorX components.
 */

#include <array>
#include <string_view>

#include "quartit/linalg.hpp"
#include "quartit/spin_ops.hpp"
#include "quartit/state_vector.hpp"

namespace quartit {

enum class ObservationModel {
    Theoretical,       ///< all four populations read directly
    IdealExperimental, ///< peak n gives rho_nn - rho_{n-1,n-1}
    Cyclops,           ///< peak intensities through the small-angle reading pulse
};

[[nodiscard]] std::string_view to_string(ObservationModel model) noexcept;
/// Accepts "theoretical", "ideal", "ideal_experimental", "cyclops" (any case).
[[nodiscard]] ObservationModel parse_observation_model(std::string_view name);

/// Number of values a single readout yields: 4 levels or 3 peaks.
[[nodiscard]] int readout_channel_count(ObservationModel model) noexcept;

using ReadoutFunctional = Eigen::Matrix<double, 1, kStateDim>;

/// (rho00, rho11, rho22, rho33).
[[nodiscard]] Vector4d theoretical_readout(const DensityMatrix &rho);

/// rho_nn - rho_{n-1,n-1}, peak in 1..3.
[[nodiscard]] double ideal_peak_readout(const DensityMatrix &rho, int peak);

/// Reading-pulse matrix e_ij (pi/20 hard pulse), symmetric about both diagonals.
[[nodiscard]] const Matrix4d &cyclops_pulse_matrix();

/// 3x4 map from population deviations to the three averaged peak intensities.
[[nodiscard]] const Eigen::Matrix<double, 3, 4> &cyclops_v_matrix();

/// Row `peak` of V applied to diag(rho - I/4).
[[nodiscard]] double cyclops_readout(const DensityMatrix &rho, int peak);

/// Model readout of rho at `channel`: level 0..3 for Theoretical, peak 1..3 otherwise.
[[nodiscard]] double model_readout(ObservationModel model, const DensityMatrix &rho, int channel);

/// Row r with r . vec(rho) = model_readout(model, R rho R^dagger, channel).
///
/// Built by feeding each Hermitian basis element through the readout, so
/// for Cyclops the row acts on the deviation linearly: the -I/4 offset is
/// dropped and the row maps vec(rho - I/4) to the peak value.
[[nodiscard]] ReadoutFunctional readout_functional(ObservationModel model, const UnitaryGate &rotation,
                                                   int channel);

} // namespace quartit
