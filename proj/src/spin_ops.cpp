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

#include "quartit/spin_ops.hpp"

#include <cmath>
#include <numbers>

#include "quartit/error.hpp"

namespace quartit {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

// Tolerance used to accept a matrix as unitary at construction.
constexpr double kUnitaryGuard = 1e-10;

void check_level(int level, std::string_view what) {
    if (level < 0 || level >= kLevels) {
        throw Error(ErrorCode::InvalidSpec,
                    std::string(what) + " level " + std::to_string(level) + " outside 0..3");
    }
}

} // namespace

std::string_view to_string(Axis axis) noexcept {
    switch (axis) {
    case Axis::X: return "X";
    case Axis::Y: return "Y";
    case Axis::Z: return "Z";
    }
    return "?";
}

Axis parse_axis(std::string_view text) {
    if (text == "X" || text == "x") return Axis::X;
    if (text == "Y" || text == "y") return Axis::Y;
    if (text == "Z" || text == "z") return Axis::Z;
    throw Error(ErrorCode::UnknownName, "unknown rotation axis '" + std::string(text) + "'");
}

StandardGate parse_standard_gate(std::string_view name) {
    if (name == "CNOT") return StandardGate::Cnot;
    if (name == "SWAP") return StandardGate::Swap;
    if (name == "CNOT_like") return StandardGate::CnotLike;
    if (name == "SWAP_like") return StandardGate::SwapLike;
    throw Error(ErrorCode::UnknownName, "unknown gate '" + std::string(name) + "'");
}

void SelectiveRotationSpec::validate() const {
    check_level(m, "lower");
    check_level(n, "upper");
    if (m >= n) {
        throw Error(ErrorCode::InvalidSpec, "selective rotation needs m < n, got m=" +
                                                std::to_string(m) + " n=" + std::to_string(n));
    }
    if (!std::isfinite(theta)) {
        throw Error(ErrorCode::InvalidSpec, "rotation angle is not finite");
    }
}

double unitarity_defect(const Matrix4c &u) {
    return (u.adjoint() * u - Matrix4c::Identity()).cwiseAbs().maxCoeff();
}

UnitaryGate::UnitaryGate(const Matrix4c &matrix) : matrix_(matrix) {
    if (!matrix.allFinite() || unitarity_defect(matrix) > kUnitaryGuard) {
        throw Error(ErrorCode::InvalidInput, "matrix is not unitary");
    }
}

UnitaryGate UnitaryGate::adjoint() const { return UnitaryGate(matrix_.adjoint(), Trusted{}); }

UnitaryGate operator*(const UnitaryGate &lhs, const UnitaryGate &rhs) {
    return UnitaryGate(lhs.matrix_ * rhs.matrix_, UnitaryGate::Trusted{});
}

Matrix4c angular_momentum(SpinComponent component) {
    const double a = std::sqrt(3.0) / 2.0;
    Matrix4c plus = Matrix4c::Zero();
    // I_+ |m> raises m_I, i.e. moves level k+1 -> k.
    plus(0, 1) = 2.0 * a;
    plus(1, 2) = 2.0;
    plus(2, 3) = 2.0 * a;
    switch (component) {
    case SpinComponent::Plus: return plus;
    case SpinComponent::Minus: return plus.adjoint();
    case SpinComponent::X: return 0.5 * (plus + plus.adjoint());
    case SpinComponent::Y: return (-0.5 * kI) * (plus - plus.adjoint());
    case SpinComponent::Z: {
        Matrix4c z = Matrix4c::Zero();
        z.diagonal() << 1.5, 0.5, -0.5, -1.5;
        return z;
    }
    }
    return Matrix4c::Zero();
}

UnitaryGate selective_rotation(const SelectiveRotationSpec &spec) {
    spec.validate();
    const double c = std::cos(spec.theta / 2.0);
    const double s = std::sin(spec.theta / 2.0);
    cd a, b, cc, d;
    switch (spec.axis) {
    case Axis::X:
        a = c;
        b = -kI * s;
        cc = -kI * s;
        d = c;
        break;
    case Axis::Y:
        a = c;
        b = -s;
        cc = s;
        d = c;
        break;
    case Axis::Z:
        a = std::exp(-kI * (spec.theta / 2.0));
        b = 0.0;
        cc = 0.0;
        d = std::exp(kI * (spec.theta / 2.0));
        break;
    }
    Matrix4c u = Matrix4c::Identity();
    u(spec.m, spec.m) = a;
    u(spec.m, spec.n) = b;
    u(spec.n, spec.m) = cc;
    u(spec.n, spec.n) = d;
    return UnitaryGate(u);
}

UnitaryGate selective_rotation(Axis axis, int m, int n, double theta) {
    return selective_rotation(SelectiveRotationSpec{axis, m, n, theta});
}

UnitaryGate swap_like(int n, int m) {
    if (n == m) {
        throw Error(ErrorCode::InvalidSpec, "SWAP-like gate needs two distinct levels");
    }
    return selective_rotation(Axis::Y, std::min(n, m), std::max(n, m), std::numbers::pi);
}

UnitaryGate virtual_qubit_rotation(VirtualQubit qubit, Axis axis, double theta) {
    if (qubit == VirtualQubit::A) {
        return selective_rotation(axis, 0, 2, theta) * selective_rotation(axis, 1, 3, theta);
    }
    return selective_rotation(axis, 0, 1, theta) * selective_rotation(axis, 2, 3, theta);
}

UnitaryGate standard_gate(StandardGate gate) {
    Matrix4c d = Matrix4c::Identity();
    d(2, 2) = -1.0;
    const UnitaryGate phase(d);
    switch (gate) {
    case StandardGate::CnotLike: return swap_like(2, 3);
    case StandardGate::SwapLike: return swap_like(1, 2);
    case StandardGate::Cnot: return phase * swap_like(2, 3);
    case StandardGate::Swap: return swap_like(1, 2) * phase;
    }
    return UnitaryGate{};
}

std::complex<double> magnetization(const DensityMatrix &rho, MagnetizationKind kind) {
    switch (kind) {
    case MagnetizationKind::Z: return (rho * angular_momentum(SpinComponent::Z)).trace();
    case MagnetizationKind::Plus: return (rho * angular_momentum(SpinComponent::Plus)).trace();
    case MagnetizationKind::Minus: return (rho * angular_momentum(SpinComponent::Minus)).trace();
    }
    return 0.0;
}

std::string virtual_qubit_label(int level) {
    check_level(level, "quartit");
    return std::string{static_cast<char>('0' + level / 2), static_cast<char>('0' + level % 2)};
}

int level_from_virtual_qubits(int qubit_a, int qubit_b) {
    if ((qubit_a != 0 && qubit_a != 1) || (qubit_b != 0 && qubit_b != 1)) {
        throw Error(ErrorCode::InvalidInput, "virtual qubit values must be 0 or 1");
    }
    return 2 * qubit_a + qubit_b;
}

void validate_density_matrix(const DensityMatrix &rho, double tolerance) {
    if (!rho.allFinite()) {
        throw Error(ErrorCode::InvalidInput, "density matrix has non-finite entries");
    }
    const double asymmetry = (rho - rho.adjoint()).cwiseAbs().maxCoeff();
    if (asymmetry > tolerance) {
        throw Error(ErrorCode::InvalidInput,
                    "density matrix is not Hermitian (asymmetry " + std::to_string(asymmetry) + ")");
    }
    if (std::abs(rho.trace() - 1.0) > tolerance) {
        throw Error(ErrorCode::InvalidInput, "density matrix trace differs from 1");
    }
}

} // namespace quartit
