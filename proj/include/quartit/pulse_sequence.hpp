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
 * Ordered selective-rotation pulse lists.
 *
 * Pulses are stored in time order (first applied first). Operator products
 * are written the usual way, rightmost factor first, so "Y01 S13" means
 * S13 is applied and then Y01.
 */

#include <string>
#include <string_view>
#include <vector>

#include "quartit/spin_ops.hpp"

namespace quartit {

class PulseSequence {
  public:
    PulseSequence() = default;
    /// Pulses in time order.
    explicit PulseSequence(std::vector<SelectiveRotationSpec> pulses);

    /// Build from factors listed as in a written operator product (leftmost applied last).
    static PulseSequence from_operator_product(const std::vector<SelectiveRotationSpec> &factors);

    /// Parse a written product such as "Y01 S13 S02" or "I".
    ///
    /// Tokens: X<mn>, Y<mn> (angle pi/2), S<mn> (Y by pi), Sd<mn> (Y by -pi),
    /// Z<mn> with an explicit angle, and an optional "(a)" suffix giving the
    /// angle in units of pi, e.g. "X03(-0.5)". "I" is the empty product.
    static PulseSequence parse(std::string_view product);

    [[nodiscard]] const std::vector<SelectiveRotationSpec> &pulses() const noexcept { return pulses_; }
    [[nodiscard]] std::size_t size() const noexcept { return pulses_.size(); }
    [[nodiscard]] bool empty() const noexcept { return pulses_.empty(); }

    /// U = U_last ... U_first.
    [[nodiscard]] UnitaryGate unitary() const;

    /// Largest photon order in the sequence, 0 for an empty sequence.
    [[nodiscard]] int max_photon_order() const noexcept;

    /// Written operator product, e.g. "Y01 S13"; "I" when empty.
    [[nodiscard]] std::string to_string() const;

    /// This sequence followed (in time) by `later`.
    [[nodiscard]] PulseSequence then(const PulseSequence &later) const;

    friend bool operator==(const PulseSequence &, const PulseSequence &) = default;

  private:
    std::vector<SelectiveRotationSpec> pulses_;
};

/// Token for a single pulse as used by PulseSequence::to_string.
[[nodiscard]] std::string pulse_token(const SelectiveRotationSpec &spec);

/// Written factors for the common pulses.
[[nodiscard]] SelectiveRotationSpec swap_pulse(int m, int n);
[[nodiscard]] SelectiveRotationSpec swap_pulse_dagger(int m, int n);
[[nodiscard]] SelectiveRotationSpec half_pi_pulse(Axis axis, int m, int n);

} // namespace quartit
