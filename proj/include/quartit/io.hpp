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
 * JSON file formats: density matrices, observation vectors, pulse programs
 * and spin-system presets. Malformed input raises Error(ParseError) with
 * the line/column or the offending field path in the message.
 */

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "quartit/dynamics.hpp"
#include "quartit/pulse_compile.hpp"
#include "quartit/tomography.hpp"

namespace quartit::io {

using Json = nlohmann::ordered_json;

/// Parses text, reporting syntax errors as "<source>:<line>:<column>: ...".
[[nodiscard]] Json parse_json(std::string_view text, std::string_view source = "<input>");
[[nodiscard]] Json read_json_file(const std::filesystem::path &path);
/// Writes `text` to `path`, creating parent directories.
void write_text_file(const std::filesystem::path &path, std::string_view text);
[[nodiscard]] std::string dump(const Json &json);

/// Accepts {"x": [16 reals]} or {"rho": 4x4 array of [re, im] pairs}.
[[nodiscard]] DensityMatrix density_matrix_from_json(const Json &json, std::string_view source = "<input>");
/// Both representations, "x" first.
[[nodiscard]] Json density_matrix_to_json(const Matrix4c &rho);

struct ObservationFile {
    std::string protocol;
    std::string model;
    double scaling_s = 1.0;
    std::vector<std::string> labels;
    RealVector values;
};

/// {"protocol", "model", "s", "rows": [{"label", "value"}, ...]}.
[[nodiscard]] ObservationFile observations_from_json(const Json &json, std::string_view source = "<input>");
[[nodiscard]] Json observations_to_json(const ObservationFile &file);

/// Pulse as {"axis", "m", "n", "theta_pi"} with the angle in units of pi.
[[nodiscard]] Json pulse_to_json(const SelectiveRotationSpec &spec);
[[nodiscard]] SelectiveRotationSpec pulse_from_json(const Json &json, std::string_view field);

/// {"protocol", "readouts": [{"product", "peaks", "pulses": [...]}]}; pulses in time order.
[[nodiscard]] Json pulse_program_to_json(const TomographyProtocol &protocol);
/// Rebuilds readouts from a pulse program; target and normalization come from `base`.
[[nodiscard]] TomographyProtocol pulse_program_from_json(const Json &json, const TomographyProtocol &base,
                                                         std::string_view source = "<input>");

/// Preset entries with omega0_hz, omegaQ_hz, gamma, B0_tesla (frequencies in Hz).
[[nodiscard]] Json preset_to_json(const NamedPreset &preset);
[[nodiscard]] std::vector<NamedPreset> presets_from_json(const Json &json, std::string_view source = "<input>");

} // namespace quartit::io
