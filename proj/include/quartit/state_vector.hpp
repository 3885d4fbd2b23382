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
 * Real 16-component parametrization of a 4x4 Hermitian matrix and helpers
 * for generating and comparing test states.
 *
 * Component order (0-based): rho00, Re rho01, Im rho01, Re rho02, Im rho02,
 * Re rho03, Im rho03, rho11, Re rho12, Im rho12, Re rho13, Im rho13, rho22,
 * Re rho23, Im rho23, rho33.
 */

#include <array>
#include <cstdint>
#include <string>

#include <Eigen/Dense>

#include "quartit/spin_ops.hpp"

namespace quartit {

inline constexpr int kStateDim = 16;

using StateVectorX = Eigen::Matrix<double, kStateDim, 1>;

/// Positions of rho00, rho11, rho22, rho33 in StateVectorX.
inline constexpr std::array<int, 4> kPopulationIndex = {0, 7, 12, 15};

/// The 12 coherence positions, in StateVectorX order.
inline constexpr std::array<int, 12> kCoherenceIndex = {1, 2, 3, 4, 5, 6, 8, 9, 10, 11, 13, 14};

/// Level pair (row, col) with row < col addressed by coherence component k,
/// and whether k is the imaginary part. Diagonal components return (i, i).
struct ComponentSlot {
    int row = 0;
    int col = 0;
    bool imaginary = false;
};
[[nodiscard]] ComponentSlot component_slot(int index);
/// Inverse of component_slot for off-diagonal pairs.
[[nodiscard]] int component_index(int row, int col, bool imaginary);
/// Short label such as "rho00", "Re rho12", "Im rho03".
[[nodiscard]] std::string component_label(int index);

/// Throws Error(InvalidInput) if rho is not Hermitian to 1e-10 or not finite.
[[nodiscard]] StateVectorX vec(const Matrix4c &rho);
[[nodiscard]] Matrix4c unvec(const StateVectorX &x);

/// Hermitian matrix B_k dual to component k:
/// Tr[B_k rho] = x_k for every Hermitian rho.
[[nodiscard]] const std::array<Matrix4c, kStateDim> &dual_basis();
/// Hermitian matrix E_k with unvec(x) = sum_k x_k E_k.
[[nodiscard]] const std::array<Matrix4c, kStateDim> &hermitian_basis();

enum class PurityMode { Pure, Mixed };

/// Pure: projector on a normalized complex Gaussian vector.
/// Mixed: G G^dagger / Tr with G a 4x4 matrix of standard complex Gaussians.
[[nodiscard]] DensityMatrix random_density_matrix(std::uint64_t seed, PurityMode mode);

/// Eigenvalue clipping to the nearest PSD unit-trace matrix. Never applied implicitly.
[[nodiscard]] DensityMatrix clip_to_physical(const Matrix4c &rho);

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, with small negative
/// eigenvalues of either argument clipped to zero.
[[nodiscard]] double fidelity(const Matrix4c &rho, const Matrix4c &sigma);

} // namespace quartit
