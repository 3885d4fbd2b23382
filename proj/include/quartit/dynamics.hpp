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
 * Rotating-frame pulse model for a spin-3/2 nucleus with first-order
 * quadrupolar splitting. Units: hbar = 1, every frequency in rad/s.
 * Preset files carry ordinary frequencies (Hz) and are converted at load.
 */

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quartit/spin_ops.hpp"

namespace quartit {

struct SpinSystemParams {
    double omega0 = 0.0; ///< Larmor angular frequency, rad/s.
    double omegaQ = 0.0; ///< first-order quadrupolar frequency, rad/s.
    double gamma = 0.0;  ///< gyromagnetic ratio, 1/(s T); 0 when unknown.
    double B0 = 0.0;     ///< static field, T; 0 when unknown.

    /// Builds omega0 = -gamma B0.
    static SpinSystemParams from_field(double gamma, double B0, double omegaQ);

    /// Human-readable notes about regime violations (|omegaQ/omega0| > 0.1,
    /// omega0 inconsistent with -gamma B0). Empty when all is well.
    [[nodiscard]] std::vector<std::string> warnings() const;

    /// Throws Error(InvalidInput) on non-finite values or on an
    /// omega0 / -gamma B0 mismatch above 1e-6 relative.
    void validate() const;
};

struct NamedPreset {
    std::string name;
    std::string description;
    SpinSystemParams params;
};

/// GaAs presets (69Ga, 71As) at B0 = 6.3 T.
[[nodiscard]] const std::vector<NamedPreset> &spin_system_presets();
[[nodiscard]] const NamedPreset &spin_system_preset(std::string_view name);

struct PulseSpec {
    double omega1 = 0.0;   ///< pulse strength, rad/s.
    double omegaRF = 0.0;  ///< carrier, rad/s.
    double phi = 0.0;      ///< phase, rad.
    double duration = 0.0; ///< t_p, s.
    double detuning = 0.0; ///< omega0 - omegaRF, rad/s.

    /// Pulse with detuning derived from the system's Larmor frequency.
    static PulseSpec make(const SpinSystemParams &sys, double omega1, double omegaRF,
                          double phi, double duration);
    /// Pulse resonant with the central |1> <-> |2> line (omegaRF = omega0, phi = 0).
    static PulseSpec central(const SpinSystemParams &sys, double omega1, double duration);
};

struct EigenSystem {
    Vector4d eigenvalues;             ///< ordered as [w1/2 + W-, w1/2 - W-, -w1/2 - W+, -w1/2 + W+]
    std::array<Vector4c, 4> eigenvectors;
    double omega_minus = 0.0;
    double omega_plus = 0.0;
};

/// omega_Q = 3 pi C_Q (3 cos^2 theta_Q - 1) / (4 I (2I - 1)); I in {3/2, 5/2, 7/2, 9/2}.
[[nodiscard]] double quadrupolar_frequency(double coupling_constant, double theta_q, double spin);

/// (omegaQ / 3)(3 I_z^2 - I(I+1)) = omegaQ diag(1, -1, -1, 1).
[[nodiscard]] Matrix4c quadrupolar_hamiltonian(const SpinSystemParams &sys);

/// detuning I_z + H_Q + omega1 (I_x cos phi + I_y sin phi).
[[nodiscard]] Matrix4c rotating_frame_hamiltonian(const SpinSystemParams &sys, const PulseSpec &pulse);

/// High-temperature state (1 - polarization I_z)/4, polarization = hbar omega0 beta.
[[nodiscard]] DensityMatrix thermal_state_from_polarization(double polarization);
/// Same, with beta = 1/(k_B T) in 1/J and omega0 in rad/s.
[[nodiscard]] DensityMatrix thermal_state(const SpinSystemParams &sys, double beta);
/// True when |hbar omega0 beta| is small enough for the linearized state (<= 0.1).
[[nodiscard]] bool high_temperature_regime(double polarization);

/// exp(-i H_rot t) through the eigendecomposition of the Hermitian H_rot.
[[nodiscard]] UnitaryGate evolution_operator(const SpinSystemParams &sys, const PulseSpec &pulse,
                                             double duration);
[[nodiscard]] DensityMatrix evolve(const DensityMatrix &rho, const SpinSystemParams &sys,
                                   const PulseSpec &pulse, double duration);
/// Sequential composition of single-pulse propagators, each for its own duration.
[[nodiscard]] DensityMatrix evolve_sequence(const DensityMatrix &rho, const SpinSystemParams &sys,
                                            std::span<const PulseSpec> pulses);

/// Closed-form eigensystem of H_rot for a pulse on the central line with phi = 0.
[[nodiscard]] EigenSystem central_transition_eigensystem(const SpinSystemParams &sys,
                                                         const PulseSpec &pulse);

/// Leading-order propagator of a central-line pulse, delta = exp(i omegaQ t_p).
[[nodiscard]] UnitaryGate approximate_central_evolution(const SpinSystemParams &sys,
                                                        const PulseSpec &pulse);

} // namespace quartit
