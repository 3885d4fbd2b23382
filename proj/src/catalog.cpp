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

#include <algorithm>

#include "quartit/error.hpp"
#include "quartit/tomography.hpp"

namespace quartit {

namespace {

std::vector<Readout> readouts(std::initializer_list<const char *> products, std::vector<int> peaks) {
    std::vector<Readout> out;
    for (const char *product : products) {
        out.push_back({PulseSequence::parse(product), peaks});
    }
    return out;
}

std::vector<Readout> readouts(std::initializer_list<const char *> products,
                              std::initializer_list<int> peak_per_readout) {
    if (products.size() != peak_per_readout.size()) {
        throw Error(ErrorCode::InvalidSpec, "catalog entry: peak list length mismatch");
    }
    std::vector<Readout> out;
    auto peak = peak_per_readout.begin();
    for (const char *product : products) {
        out.push_back({PulseSequence::parse(product), {*peak++}});
    }
    return out;
}

std::vector<Readout> concat(std::vector<Readout> first, const std::vector<Readout> &second) {
    first.insert(first.end(), second.begin(), second.end());
    return first;
}

std::vector<TomographyProtocol> make_catalog() {
    const auto diag_opt1 = readouts({"I", "S02", "S13 S02", "S13", "S12", "S03"}, std::vector<int>{1});
    const auto diag_opt2 = readouts({"I", "S02", "S13", "S01 S23", "S01", "S23"}, std::vector<int>{2});
    const auto offdiag_opt1 = readouts({"Y01", "X01", "S02 Y12", "S02 X12", "Y01 S13 S02", "X01 S13 S02",
                                        "Y01 S12", "X01 S12", "S02 Y12 S23", "S02 X12 S23", "Y01 S13",
                                        "X01 S13"},
                                       std::vector<int>{1});
    const auto offdiag_opt2 = readouts({"Y12 S02", "X12 S02", "Y12", "X12", "Y12 S13", "X12 S13", "Y12 S01",
                                        "X12 S01", "Y12 S23", "X12 S23", "Y12 S01 S23", "X12 S01 S23"},
                                       std::vector<int>{2});
    const std::vector<int> all_peaks{1, 2, 3};

    std::vector<TomographyProtocol> out;
    out.push_back({"diag_temp1", "populations from the three peaks of the unrotated state",
                   readouts({"I"}, all_peaks), Target::Diagonal, Normalization::Single, 1.0});
    out.push_back({"diag_temp2", "diag_temp1 plus an S13-rotated first peak",
                   concat(readouts({"I"}, all_peaks), readouts({"S13"}, std::vector<int>{1})),
                   Target::Diagonal, Normalization::Single, 1.0});
    out.push_back({"diag_temp3", "three peaks of the unrotated state with a scaled trace row",
                   readouts({"I"}, all_peaks), Target::Diagonal, Normalization::Single, 1.0});
    out.push_back({"diag_opt1", "populations from six SWAP-like readouts of peak 1", diag_opt1,
                   Target::Diagonal, Normalization::Single, 0.2318});
    out.push_back({"diag_opt2", "populations from six SWAP-like readouts of peak 2", diag_opt2,
                   Target::Diagonal, Normalization::Single, 0.3043});
    out.push_back({"offdiag_temp", "X and Y half-pi pulses on every level pair, all peaks",
                   readouts({"Y01", "X01", "Y12", "X12", "Y23", "X23", "Y02", "X02", "Y13", "X13", "Y03", "X03"},
                            all_peaks),
                   Target::Full, Normalization::PerReadout, 1.0});
    out.push_back({"offdiag_temp_shortcut", "offdiag_temp with the 0-3 pulses replaced by Y01 S13 and X01 S13",
                   readouts({"Y01", "X01", "Y12", "X12", "Y23", "X23", "Y02", "X02", "Y13", "X13", "Y01 S13",
                             "X01 S13"},
                            all_peaks),
                   Target::Full, Normalization::PerReadout, 1.0});
    out.push_back({"offdiag_opt0", "single- and two-pulse coherence readouts on peaks 1-3",
                   readouts({"Y01", "X01", "Y12", "X12", "Y23", "X23", "Y01 S12", "X01 S12", "Y12 S23", "X12 S23",
                             "Y01 S13", "X01 S13"},
                            {1, 1, 2, 2, 3, 3, 1, 1, 2, 2, 1, 1}),
                   Target::OffDiagonal, Normalization::None, 1.0});
    out.push_back({"offdiag_opt1", "coherences read on peak 1 only", offdiag_opt1, Target::OffDiagonal,
                   Normalization::None, 1.0});
    out.push_back({"offdiag_opt2", "coherences read on peak 2 only", offdiag_opt2, Target::OffDiagonal,
                   Normalization::None, 1.0});
    out.push_back({"full_opt1", "offdiag_opt1 followed by diag_opt1, peak 1", concat(offdiag_opt1, diag_opt1),
                   Target::Full, Normalization::Single, 0.2304});
    out.push_back({"full_opt2", "offdiag_opt2 followed by diag_opt2, peak 2", concat(offdiag_opt2, diag_opt2),
                   Target::Full, Normalization::Single, 0.3043});
    for (const auto &protocol : out) {
        protocol.validate();
    }
    return out;
}

} // namespace

std::string_view to_string(Target target) noexcept {
    switch (target) {
    case Target::Diagonal: return "diagonal";
    case Target::OffDiagonal: return "offdiagonal";
    case Target::Full: return "full";
    }
    return "?";
}

std::string_view to_string(Normalization normalization) noexcept {
    switch (normalization) {
    case Normalization::None: return "none";
    case Normalization::Single: return "single";
    case Normalization::PerReadout: return "per_readout";
    }
    return "?";
}

std::vector<int> TomographyProtocol::columns() const {
    switch (target) {
    case Target::Diagonal: return {kPopulationIndex.begin(), kPopulationIndex.end()};
    case Target::OffDiagonal: return {kCoherenceIndex.begin(), kCoherenceIndex.end()};
    case Target::Full: break;
    }
    std::vector<int> all(kStateDim);
    for (int k = 0; k < kStateDim; ++k) {
        all[static_cast<std::size_t>(k)] = k;
    }
    return all;
}

void TomographyProtocol::validate() const {
    if (readouts.empty()) {
        throw Error(ErrorCode::InvalidSpec, "protocol '" + name + "' has no readouts");
    }
    for (const auto &readout : readouts) {
        if (readout.peaks.empty()) {
            throw Error(ErrorCode::InvalidSpec, "protocol '" + name + "' has a readout with no peaks");
        }
        for (int peak : readout.peaks) {
            if (peak < 1 || peak > 3) {
                throw Error(ErrorCode::InvalidSpec,
                            "protocol '" + name + "': peak " + std::to_string(peak) + " outside 1..3");
            }
        }
    }
    if (!(cyclops_scaling > 0.0)) {
        throw Error(ErrorCode::InvalidSpec, "protocol '" + name + "': scaling must be positive");
    }
}

const std::vector<TomographyProtocol> &protocol_catalog() {
    static const std::vector<TomographyProtocol> catalog = make_catalog();
    return catalog;
}

const TomographyProtocol &protocol_catalog(std::string_view name) {
    const auto &catalog = protocol_catalog();
    const auto it = std::find_if(catalog.begin(), catalog.end(), [&](const auto &p) { return p.name == name; });
    if (it == catalog.end()) {
        throw Error(ErrorCode::UnknownName, "unknown protocol '" + std::string(name) + "'");
    }
    return *it;
}

double default_scaling(const TomographyProtocol &protocol, ObservationModel model) {
    return model == ObservationModel::Cyclops ? protocol.cyclops_scaling : 1.0;
}

} // namespace quartit
