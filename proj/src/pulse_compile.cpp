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

#include "quartit/pulse_compile.hpp"

#include <cmath>
#include <numbers>

#include "quartit/error.hpp"

namespace quartit {

namespace {

using Factors = std::vector<SelectiveRotationSpec>;

SelectiveRotationSpec with(const SelectiveRotationSpec &spec, int m, int n, double theta) {
    return {spec.axis, m, n, theta};
}

bool is_swap(const SelectiveRotationSpec &spec) {
    return spec.axis == Axis::Y && std::abs(std::abs(spec.theta) - std::numbers::pi) <= 1e-12;
}

// Written factors for one rewrite step (leftmost applied last).
Factors rewrite(const SelectiveRotationSpec &spec, RewriteStrategy strategy) {
    const int k = spec.m;
    const int n = spec.n;
    const double theta = spec.theta;
    switch (strategy) {
    case RewriteStrategy::SwapTop:
        return {swap_pulse(k + 1, n), with(spec, k, k + 1, theta), swap_pulse_dagger(k + 1, n)};
    case RewriteStrategy::Chain: {
        Factors left;
        Factors right;
        for (int j = k; j < n - 1; ++j) {
            left.push_back(swap_pulse(j, j + 1));
        }
        for (int j = n - 2; j >= k; --j) {
            right.push_back(swap_pulse_dagger(j, j + 1));
        }
        const double sign = ((n - k + 1) % 2 == 0) ? 1.0 : -1.0;
        Factors out = left;
        out.push_back(with(spec, n - 1, n, sign * theta));
        out.insert(out.end(), right.begin(), right.end());
        return out;
    }
    case RewriteStrategy::Nested:
        if (n - k >= 3) {
            // Bottom peel flips the angle, top peel keeps it.
            return {swap_pulse(k, k + 1), swap_pulse(n - 1, n), with(spec, k + 1, n - 1, -theta),
                    swap_pulse_dagger(n - 1, n), swap_pulse_dagger(k, k + 1)};
        }
        return {swap_pulse(k, k + 1), with(spec, k + 1, n, -theta), swap_pulse_dagger(k, k + 1)};
    }
    throw Error(ErrorCode::InvalidSpec, "unknown rewrite strategy");
}

RewriteStrategy exact_strategy(CompileStrategy strategy) {
    switch (strategy) {
    case CompileStrategy::SwapTop: return RewriteStrategy::SwapTop;
    case CompileStrategy::Nested: return RewriteStrategy::Nested;
    case CompileStrategy::Chain:
    case CompileStrategy::ShortSwap: break;
    }
    return RewriteStrategy::Chain;
}

// S02 -> S01 S12 and S13 -> S12 S23 S12, in time order; empty if not applicable.
std::vector<SelectiveRotationSpec> short_swap(const SelectiveRotationSpec &spec) {
    if (!is_swap(spec) || spec.theta < 0.0) {
        return {};
    }
    if (spec.m == 0 && spec.n == 2) {
        return PulseSequence::parse("S01 S12").pulses();
    }
    if (spec.m == 1 && spec.n == 3) {
        return PulseSequence::parse("S12 S23 S12").pulses();
    }
    return {};
}

} // namespace

std::string_view to_string(RewriteStrategy strategy) noexcept {
    switch (strategy) {
    case RewriteStrategy::SwapTop: return "swap_top";
    case RewriteStrategy::Chain: return "chain";
    case RewriteStrategy::Nested: return "nested";
    }
    return "?";
}

std::string_view to_string(CompileStrategy strategy) noexcept {
    switch (strategy) {
    case CompileStrategy::SwapTop: return "swap_top";
    case CompileStrategy::Chain: return "chain";
    case CompileStrategy::Nested: return "nested";
    case CompileStrategy::ShortSwap: return "short_swap";
    }
    return "?";
}

CompileStrategy parse_compile_strategy(std::string_view name) {
    if (name == "swap_top" || name == "swap-top") return CompileStrategy::SwapTop;
    if (name == "chain") return CompileStrategy::Chain;
    if (name == "nested") return CompileStrategy::Nested;
    if (name == "short_swap" || name == "short-swap") return CompileStrategy::ShortSwap;
    throw Error(ErrorCode::UnknownName, "unknown compile strategy '" + std::string(name) + "'");
}

Replacement replace_multiphoton(const SelectiveRotationSpec &spec, RewriteStrategy strategy) {
    spec.validate();
    if (spec.photon_order() < 2) {
        return {PulseSequence({spec}), "single-photon pulse left unchanged"};
    }
    if (spec.axis == Axis::Z) {
        throw Error(ErrorCode::InvalidSpec, "multiphoton rewrites are defined for X and Y rotations only");
    }
    return {PulseSequence::from_operator_product(rewrite(spec, strategy)), {}};
}

PulseSequence expand_to_order(const SelectiveRotationSpec &spec, int max_order, RewriteStrategy strategy) {
    if (max_order < 1) {
        throw Error(ErrorCode::InvalidInput, "maximum photon order must be at least 1");
    }
    if (spec.photon_order() <= max_order) {
        return PulseSequence({spec});
    }
    std::vector<SelectiveRotationSpec> out;
    const Replacement step = replace_multiphoton(spec, strategy);
    for (const auto &pulse : step.sequence.pulses()) {
        const auto expanded = expand_to_order(pulse, max_order, strategy);
        out.insert(out.end(), expanded.pulses().begin(), expanded.pulses().end());
    }
    return PulseSequence(std::move(out));
}

PulseSequence adjoint(const PulseSequence &sequence) {
    std::vector<SelectiveRotationSpec> out;
    for (auto it = sequence.pulses().rbegin(); it != sequence.pulses().rend(); ++it) {
        out.push_back({it->axis, it->m, it->n, -it->theta});
    }
    return PulseSequence(std::move(out));
}

CompileResult compile_protocol(const TomographyProtocol &protocol, int max_photon_order, CompileStrategy strategy) {
    if (max_photon_order != 1 && max_photon_order != 2) {
        throw Error(ErrorCode::InvalidInput, "maximum photon order must be 1 or 2");
    }
    protocol.validate();
    CompileResult result;
    result.protocol = protocol;
    result.strategy = strategy;
    result.max_photon_order = max_photon_order;
    const RewriteStrategy exact = exact_strategy(strategy);

    for (auto &readout : result.protocol.readouts) {
        std::vector<SelectiveRotationSpec> pulses;
        for (const auto &pulse : readout.sequence.pulses()) {
            if (pulse.photon_order() > max_photon_order && strategy == CompileStrategy::ShortSwap) {
                const auto replacement = short_swap(pulse);
                if (!replacement.empty()) {
                    pulses.insert(pulses.end(), replacement.begin(), replacement.end());
                    result.exact = false;
                    continue;
                }
            }
            const auto expanded = expand_to_order(pulse, max_photon_order, exact);
            pulses.insert(pulses.end(), expanded.pulses().begin(), expanded.pulses().end());
        }
        ReadoutDepth depth;
        depth.original = readout.sequence.to_string();
        depth.pulses_before = readout.sequence.size();
        readout.sequence = PulseSequence(std::move(pulses));
        depth.compiled = readout.sequence.to_string();
        depth.pulses_after = readout.sequence.size();
        result.depth.push_back(std::move(depth));
    }
    result.protocol.name = protocol.name + "@max" + std::to_string(max_photon_order);
    return result;
}

PhotonCensus photon_order_report(const TomographyProtocol &protocol) {
    PhotonCensus census;
    for (const auto &readout : protocol.readouts) {
        for (const auto &pulse : readout.sequence.pulses()) {
            ++census.counts[static_cast<std::size_t>(pulse.photon_order())];
        }
    }
    return census;
}

} // namespace quartit
