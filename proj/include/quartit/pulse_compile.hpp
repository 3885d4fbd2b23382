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
 * Rewriting multiphoton selective rotations into single-photon pulse
 * sequences, and compiling whole protocols with them.
 */

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "quartit/pulse_sequence.hpp"
#include "quartit/tomography.hpp"

namespace quartit {

/// Exact rewrite rules for an X or Y rotation on levels k < n, n - k >= 2.
enum class RewriteStrategy {
    SwapTop, ///< S_{k+1,n} R_{k,k+1}(theta) S_{k+1,n}^dagger
    Chain,   ///< S_{k,k+1}...S_{n-2,n-1} R_{n-1,n}(+-theta) (...)^dagger
    Nested,  ///< peel the outer single-photon swaps from both ends
};

/// Protocol compilation strategies: the exact rewrites, plus ShortSwap which
/// replaces S02 by S01 S12 and S13 by S12 S23 S12. ShortSwap is not a
/// matrix identity and can change the coefficient matrix.
enum class CompileStrategy { SwapTop, Chain, Nested, ShortSwap };

[[nodiscard]] std::string_view to_string(RewriteStrategy strategy) noexcept;
[[nodiscard]] std::string_view to_string(CompileStrategy strategy) noexcept;
[[nodiscard]] CompileStrategy parse_compile_strategy(std::string_view name);

struct Replacement {
    PulseSequence sequence;
    std::string note; ///< nonempty when the input was returned unchanged
};

/// One rewrite step. The emitted swaps may themselves be multiphoton for
/// SwapTop; use expand_to_order() for a fully single-photon sequence.
/// Throws Error(InvalidSpec) for a Z rotation spanning two or more levels.
[[nodiscard]] Replacement replace_multiphoton(const SelectiveRotationSpec &spec, RewriteStrategy strategy);

/// Rewrites recursively until every pulse has photon order <= max_order.
[[nodiscard]] PulseSequence expand_to_order(const SelectiveRotationSpec &spec, int max_order,
                                            RewriteStrategy strategy);

/// Inverse sequence: reversed order, negated angles.
[[nodiscard]] PulseSequence adjoint(const PulseSequence &sequence);

struct ReadoutDepth {
    std::string original;
    std::string compiled;
    std::size_t pulses_before = 0;
    std::size_t pulses_after = 0;
};

struct CompileResult {
    TomographyProtocol protocol;
    CompileStrategy strategy = CompileStrategy::Chain;
    int max_photon_order = 1;
    bool exact = true; ///< every rewrite used was a matrix identity
    std::vector<ReadoutDepth> depth;
};

/// max_photon_order must be 1 or 2.
[[nodiscard]] CompileResult compile_protocol(const TomographyProtocol &protocol, int max_photon_order,
                                             CompileStrategy strategy = CompileStrategy::Chain);

/// counts[k] = number of k-photon pulses, k = 1..3 (counts[0] unused).
struct PhotonCensus {
    std::array<int, 4> counts{};
    [[nodiscard]] int total() const noexcept { return counts[1] + counts[2] + counts[3]; }
};

[[nodiscard]] PhotonCensus photon_order_report(const TomographyProtocol &protocol);

} // namespace quartit
