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

#include "quartit/dynamics.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "quartit/error.hpp"

namespace quartit {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};
constexpr double kHbar = 1.054571817e-34; // J s
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool require_finite(double v) { return std::isfinite(v); }

} // namespace

SpinSystemParams SpinSystemParams::from_field(double gamma, double B0, double omegaQ) {
    return SpinSystemParams{-gamma * B0, omegaQ, gamma, B0};
}

std::vector<std::string> SpinSystemParams::warnings() const {
    std::vector<std::string> out;
    if (omega0 != 0.0 && std::abs(omegaQ / omega0) > 0.1) {
        out.emplace_back("|omegaQ/omega0| > 0.1: secular approximation is questionable");
    }
    if (gamma != 0.0 && B0 != 0.0) {
        const double expected = -gamma * B0;
        if (std::abs(omega0 - expected) > 1e-6 * std::abs(expected)) {
            out.emplace_back("omega0 differs from -gamma*B0");
        }
    }
    return out;
}

void SpinSystemParams::validate() const {
    if (!require_finite(omega0) || !require_finite(omegaQ) || !require_finite(gamma) ||
        !require_finite(B0)) {
        throw Error(ErrorCode::InvalidInput, "spin system parameters must be finite");
    }
    if (gamma != 0.0 && B0 != 0.0) {
        const double expected = -gamma * B0;
        if (std::abs(omega0 - expected) > 1e-6 * std::abs(expected)) {
            throw Error(ErrorCode::InvalidInput, "omega0 inconsistent with -gamma*B0");
        }
    }
}

const std::vector<NamedPreset> &spin_system_presets() {
    static const std::vector<NamedPreset> presets = {
        {"Ga69", "69Ga in GaAs, B0 = 6.3 T, omegaQ = 2pi x 15.2 kHz",
         SpinSystemParams::from_field(1.17e7, 6.3, kTwoPi * 15.2e3)},
        {"As71", "As nucleus in GaAs, B0 = 6.3 T, omegaQ = 2pi x 26.9 kHz",
         SpinSystemParams::from_field(7.32e6, 6.3, kTwoPi * 26.9e3)},
    };
    return presets;
}

const NamedPreset &spin_system_preset(std::string_view name) {
    for (const auto &preset : spin_system_presets()) {
        if (preset.name == name) {
            return preset;
        }
    }
    throw Error(ErrorCode::UnknownName, "unknown preset '" + std::string(name) + "'");
}

PulseSpec PulseSpec::make(const SpinSystemParams &sys, double omega1, double omegaRF, double phi,
                          double duration) {
    if (duration < 0.0) {
        throw Error(ErrorCode::InvalidInput, "pulse duration must be nonnegative");
    }
    return PulseSpec{omega1, omegaRF, phi, duration, sys.omega0 - omegaRF};
}

PulseSpec PulseSpec::central(const SpinSystemParams &sys, double omega1, double duration) {
    return make(sys, omega1, sys.omega0, 0.0, duration);
}

double quadrupolar_frequency(double coupling_constant, double theta_q, double spin) {
    const double twice = 2.0 * spin;
    const bool half_integer = std::abs(twice - std::round(twice)) < 1e-12 &&
                              static_cast<long>(std::round(twice)) % 2 == 1;
    if (!half_integer || spin < 1.5 || spin > 4.5) {
        throw Error(ErrorCode::InvalidInput, "spin must be one of 3/2, 5/2, 7/2, 9/2");
    }
    const double c = std::cos(theta_q);
    return 3.0 * std::numbers::pi * coupling_constant * (3.0 * c * c - 1.0) /
           (4.0 * spin * (2.0 * spin - 1.0));
}

Matrix4c quadrupolar_hamiltonian(const SpinSystemParams &sys) {
    const Matrix4c iz = angular_momentum(SpinComponent::Z);
    constexpr double kSpinSquare = 1.5 * 2.5;
    return (sys.omegaQ / 3.0) * (3.0 * iz * iz - kSpinSquare * Matrix4c::Identity());
}

Matrix4c rotating_frame_hamiltonian(const SpinSystemParams &sys, const PulseSpec &pulse) {
    const Matrix4c i_phi = std::cos(pulse.phi) * angular_momentum(SpinComponent::X) +
                           std::sin(pulse.phi) * angular_momentum(SpinComponent::Y);
    return pulse.detuning * angular_momentum(SpinComponent::Z) + quadrupolar_hamiltonian(sys) +
           pulse.omega1 * i_phi;
}

bool high_temperature_regime(double polarization) { return std::abs(polarization) <= 0.1; }

DensityMatrix thermal_state_from_polarization(double polarization) {
    if (!std::isfinite(polarization)) {
        throw Error(ErrorCode::InvalidInput, "polarization must be finite");
    }
    // Smallest eigenvalue of (1 - p I_z)/4 is (1 - 1.5|p|)/4.
    if (1.5 * std::abs(polarization) > 1.0) {
        throw Error(ErrorCode::NotPositive,
                    "linearized thermal state is not positive semidefinite (|hbar omega0 beta| > 2/3)");
    }
    DensityMatrix rho = 0.25 * (Matrix4c::Identity() - polarization * angular_momentum(SpinComponent::Z));
    return rho / rho.trace();
}

DensityMatrix thermal_state(const SpinSystemParams &sys, double beta) {
    return thermal_state_from_polarization(kHbar * sys.omega0 * beta);
}

UnitaryGate evolution_operator(const SpinSystemParams &sys, const PulseSpec &pulse, double duration) {
    if (duration < 0.0 || !std::isfinite(duration)) {
        throw Error(ErrorCode::InvalidInput, "evolution time must be finite and nonnegative");
    }
    const Matrix4c h = rotating_frame_hamiltonian(sys, pulse);
    Eigen::SelfAdjointEigenSolver<Matrix4c> solver(h);
    const Vector4c phases =
        (solver.eigenvalues().cast<cd>() * (-kI * duration)).array().exp().matrix();
    const Matrix4c &vectors = solver.eigenvectors();
    return UnitaryGate(vectors * phases.asDiagonal() * vectors.adjoint());
}

DensityMatrix evolve(const DensityMatrix &rho, const SpinSystemParams &sys, const PulseSpec &pulse,
                     double duration) {
    return evolution_operator(sys, pulse, duration).apply(rho);
}

DensityMatrix evolve_sequence(const DensityMatrix &rho, const SpinSystemParams &sys,
                              std::span<const PulseSpec> pulses) {
    DensityMatrix state = rho;
    for (const auto &pulse : pulses) {
        state = evolve(state, sys, pulse, pulse.duration);
    }
    return state;
}

EigenSystem central_transition_eigensystem(const SpinSystemParams &sys, const PulseSpec &pulse) {
    const double w1 = pulse.omega1;
    const double wq = sys.omegaQ;
    EigenSystem out;
    out.omega_minus = std::sqrt(w1 * w1 - w1 * wq + wq * wq);
    out.omega_plus = std::sqrt(w1 * w1 + w1 * wq + wq * wq);
    out.eigenvalues << w1 / 2 + out.omega_minus, w1 / 2 - out.omega_minus,
        -w1 / 2 - out.omega_plus, -w1 / 2 + out.omega_plus;

    const double r3w1 = std::sqrt(3.0) * w1;
    const double scale = std::abs(w1) + std::abs(wq);
    // Symmetric (|0>+|3>, |1>+|2>) and antisymmetric families, labelled
    // m in {1,2} and n in {3,4}. At w1 = 0 one member of each family
    // degenerates to the zero vector and is replaced by its limit.
    auto symmetric = [&](int m) {
        const double y = w1 + 2.0 * (m % 2 == 0 ? 1.0 : -1.0) * out.omega_minus - 2.0 * wq;
        Vector4c v(r3w1, y, y, r3w1);
        if (v.norm() <= 1e-14 * scale) {
            v << 1.0, 0.0, 0.0, 1.0;
        }
        return Vector4c(v.normalized());
    };
    auto antisymmetric = [&](int n) {
        const double z = w1 - 2.0 * (n % 2 == 0 ? 1.0 : -1.0) * out.omega_plus + 2.0 * wq;
        Vector4c v(-r3w1, z, -z, r3w1);
        if (v.norm() <= 1e-14 * scale) {
            v << -1.0, 0.0, 0.0, 1.0;
        }
        return Vector4c(v.normalized());
    };
    out.eigenvectors = {symmetric(2), symmetric(1), antisymmetric(3), antisymmetric(4)};
    return out;
}

UnitaryGate approximate_central_evolution(const SpinSystemParams &sys, const PulseSpec &pulse) {
    const double tp = pulse.duration;
    const cd delta = std::exp(kI * (sys.omegaQ * tp));
    const double c = std::cos(pulse.omega1 * tp);
    const double s = std::sin(pulse.omega1 * tp);
    Matrix4c u = Matrix4c::Zero();
    u(0, 0) = std::conj(delta);
    u(1, 1) = delta * c;
    u(1, 2) = -kI * delta * s;
    u(2, 1) = -kI * delta * s;
    u(2, 2) = delta * c;
    u(3, 3) = std::conj(delta);
    return UnitaryGate(u);
}

} // namespace quartit
