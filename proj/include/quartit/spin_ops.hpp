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
 * Spin-3/2 operator algebra in the level basis |0> = |m_I = +3/2>, ...,
 * |3> = |m_I = -3/2>: angular momentum matrices, selective two-level
 * rotations, SWAP-like pulses, virtual-qubit gates and magnetization
 * observables.
 */

#include <complex>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace quartit {

inline constexpr int kLevels = 4;

using Matrix4c = Eigen::Matrix4cd;
using Vector4c = Eigen::Vector4cd;
using Matrix4d = Eigen::Matrix4d;
using Vector4d = Eigen::Vector4d;

/// 4x4 Hermitian, unit-trace operator. Stored as a plain Eigen matrix so it
/// composes with Eigen expressions; use validate_density_matrix() at
/// trust boundaries.
using DensityMatrix = Matrix4c;

enum class Axis { X, Y, Z };
enum class SpinComponent { X, Y, Z, Plus, Minus };
enum class MagnetizationKind { Z, Plus, Minus };
enum class VirtualQubit { A, B };
enum class StandardGate { Cnot, Swap, CnotLike, SwapLike };

[[nodiscard]] std::string_view to_string(Axis axis) noexcept;
[[nodiscard]] Axis parse_axis(std::string_view text);
[[nodiscard]] StandardGate parse_standard_gate(std::string_view name);

/// R^(axis)_{mn}(theta): a 2x2 rotation acting on levels m < n.
struct SelectiveRotationSpec {
    Axis axis = Axis::X;
    int m = 0;
    int n = 1;
    double theta = 0.0;

    /// Throws Error(InvalidSpec) unless 0 <= m < n <= 3 and theta is finite.
    void validate() const;

    /// Angular-momentum quanta bridged by the transition, n - m.
    [[nodiscard]] int photon_order() const noexcept { return n - m; }

    friend bool operator==(const SelectiveRotationSpec &, const SelectiveRotationSpec &) = default;
};

/// Unitary 4x4 operator. Construction checks U^dagger U = I.
class UnitaryGate {
  public:
    UnitaryGate() : matrix_(Matrix4c::Identity()) {}
    explicit UnitaryGate(const Matrix4c &matrix);

    [[nodiscard]] const Matrix4c &matrix() const noexcept { return matrix_; }
    [[nodiscard]] UnitaryGate adjoint() const;

    /// Conjugation rho -> U rho U^dagger.
    [[nodiscard]] Matrix4c apply(const Matrix4c &rho) const {
        return matrix_ * rho * matrix_.adjoint();
    }

    friend UnitaryGate operator*(const UnitaryGate &lhs, const UnitaryGate &rhs);

  private:
    struct Trusted {};
    UnitaryGate(const Matrix4c &matrix, Trusted) : matrix_(matrix) {}

    Matrix4c matrix_;
};

/// Largest entrywise deviation of U^dagger U from the identity.
[[nodiscard]] double unitarity_defect(const Matrix4c &u);

[[nodiscard]] Matrix4c angular_momentum(SpinComponent component);

[[nodiscard]] UnitaryGate selective_rotation(const SelectiveRotationSpec &spec);
[[nodiscard]] UnitaryGate selective_rotation(Axis axis, int m, int n, double theta);

/// S_{nm} = Y_{nm}(pi); the level order of the arguments does not matter.
[[nodiscard]] UnitaryGate swap_like(int n, int m);

/// R^A = R_02 R_13, R^B = R_01 R_23.
[[nodiscard]] UnitaryGate virtual_qubit_rotation(VirtualQubit qubit, Axis axis, double theta);

[[nodiscard]] UnitaryGate standard_gate(StandardGate gate);

/// Tr[rho I_kind].
[[nodiscard]] std::complex<double> magnetization(const DensityMatrix &rho, MagnetizationKind kind);

/// Two-virtual-qubit label of a quartit level: 0 -> "00", 1 -> "01", 2 -> "10", 3 -> "11".
[[nodiscard]] std::string virtual_qubit_label(int level);
[[nodiscard]] int level_from_virtual_qubits(int qubit_a, int qubit_b);

/// Throws Error(InvalidInput) unless rho is finite, Hermitian to `tolerance`
/// and has unit trace to `tolerance`.
void validate_density_matrix(const DensityMatrix &rho, double tolerance = 1e-10);

} // namespace quartit
