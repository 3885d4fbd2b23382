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

#include "quartit/io.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include "quartit/error.hpp"

namespace quartit::io {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

[[noreturn]] void field_error(std::string_view source, std::string_view field, std::string_view what) {
    throw Error(ErrorCode::ParseError, std::string(source) + ": field '" + std::string(field) + "': " +
                                           std::string(what));
}

const Json &require(const Json &object, std::string_view key, std::string_view source, std::string_view path) {
    if (!object.is_object()) {
        field_error(source, path, "expected an object");
    }
    const auto it = object.find(std::string(key));
    if (it == object.end()) {
        field_error(source, std::string(path) + "/" + std::string(key), "missing");
    }
    return *it;
}

double number(const Json &value, std::string_view source, std::string_view path) {
    if (!value.is_number()) {
        field_error(source, path, "expected a number");
    }
    const double v = value.get<double>();
    if (!std::isfinite(v)) {
        field_error(source, path, "not finite");
    }
    return v;
}

int integer(const Json &value, std::string_view source, std::string_view path) {
    if (!value.is_number_integer()) {
        field_error(source, path, "expected an integer");
    }
    return value.get<int>();
}

std::string text(const Json &value, std::string_view source, std::string_view path) {
    if (!value.is_string()) {
        field_error(source, path, "expected a string");
    }
    return value.get<std::string>();
}

std::string at(std::string_view path, std::size_t index) { return std::string(path) + "/" + std::to_string(index); }

} // namespace

Json parse_json(std::string_view text_in, std::string_view source) {
    try {
        return Json::parse(text_in.begin(), text_in.end());
    } catch (const nlohmann::json::parse_error &e) {
        // Convert the byte offset into a line and column.
        std::size_t line = 1;
        std::size_t column = 1;
        const std::size_t limit = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text_in.size());
        for (std::size_t i = 0; i < limit; ++i) {
            if (text_in[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw Error(ErrorCode::ParseError, std::string(source) + ":" + std::to_string(line) + ":" +
                                               std::to_string(column) + ": malformed JSON");
    }
}

Json read_json_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::IoError, "cannot read '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_json(buffer.str(), path.string());
}

void write_text_file(const std::filesystem::path &path, std::string_view content) {
    if (path.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(path.parent_path(), ec);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw Error(ErrorCode::IoError, "cannot write '" + path.string() + "'");
    }
    out << content;
    if (!out) {
        throw Error(ErrorCode::IoError, "write failed for '" + path.string() + "'");
    }
}

std::string dump(const Json &json) { return json.dump(2) + "\n"; }

DensityMatrix density_matrix_from_json(const Json &json, std::string_view source) {
    if (!json.is_object()) {
        field_error(source, "", "expected an object with 'x' or 'rho'");
    }
    if (json.contains("x")) {
        const Json &x = json["x"];
        if (!x.is_array() || x.size() != static_cast<std::size_t>(kStateDim)) {
            field_error(source, "x", "expected 16 numbers");
        }
        StateVectorX v;
        for (std::size_t k = 0; k < x.size(); ++k) {
            v(static_cast<Eigen::Index>(k)) = number(x[k], source, at("x", k));
        }
        return unvec(v);
    }
    if (json.contains("rho")) {
        const Json &rows = json["rho"];
        if (!rows.is_array() || rows.size() != 4) {
            field_error(source, "rho", "expected 4 rows");
        }
        Matrix4c rho;
        for (std::size_t r = 0; r < 4; ++r) {
            const Json &row = rows[r];
            if (!row.is_array() || row.size() != 4) {
                field_error(source, at("rho", r), "expected 4 entries");
            }
            for (std::size_t c = 0; c < 4; ++c) {
                const Json &entry = row[c];
                const std::string path = at(at("rho", r), c);
                if (entry.is_number()) {
                    rho(static_cast<int>(r), static_cast<int>(c)) = number(entry, source, path);
                } else if (entry.is_array() && entry.size() == 2) {
                    rho(static_cast<int>(r), static_cast<int>(c)) = {number(entry[0], source, path + "/0"),
                                                                     number(entry[1], source, path + "/1")};
                } else {
                    field_error(source, path, "expected a number or [re, im]");
                }
            }
        }
        try {
            validate_density_matrix(rho, 1e-9);
        } catch (const Error &e) {
            field_error(source, "rho", e.what());
        }
        return rho;
    }
    field_error(source, "", "expected 'x' or 'rho'");
}

Json density_matrix_to_json(const Matrix4c &rho) {
    Json out;
    const StateVectorX x = vec(rho);
    out["x"] = Json::array();
    for (int k = 0; k < kStateDim; ++k) {
        out["x"].push_back(x(k));
    }
    out["rho"] = Json::array();
    for (int r = 0; r < 4; ++r) {
        Json row = Json::array();
        for (int c = 0; c < 4; ++c) {
            row.push_back(Json::array({rho(r, c).real(), rho(r, c).imag()}));
        }
        out["rho"].push_back(row);
    }
    return out;
}

ObservationFile observations_from_json(const Json &json, std::string_view source) {
    ObservationFile out;
    out.protocol = text(require(json, "protocol", source, ""), source, "protocol");
    out.model = text(require(json, "model", source, ""), source, "model");
    out.scaling_s = number(require(json, "s", source, ""), source, "s");
    const Json &rows = require(json, "rows", source, "");
    if (!rows.is_array()) {
        field_error(source, "rows", "expected an array");
    }
    out.values.resize(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::string path = at("rows", i);
        out.labels.push_back(text(require(rows[i], "label", source, path), source, path + "/label"));
        out.values(static_cast<Eigen::Index>(i)) =
            number(require(rows[i], "value", source, path), source, path + "/value");
    }
    return out;
}

Json observations_to_json(const ObservationFile &file) {
    Json out;
    out["protocol"] = file.protocol;
    out["model"] = file.model;
    out["s"] = file.scaling_s;
    out["rows"] = Json::array();
    for (std::size_t i = 0; i < file.labels.size(); ++i) {
        out["rows"].push_back({{"label", file.labels[i]}, {"value", file.values(static_cast<Eigen::Index>(i))}});
    }
    return out;
}

Json pulse_to_json(const SelectiveRotationSpec &spec) {
    Json out;
    out["axis"] = std::string(to_string(spec.axis));
    out["m"] = spec.m;
    out["n"] = spec.n;
    out["theta_pi"] = spec.theta / std::numbers::pi;
    return out;
}

SelectiveRotationSpec pulse_from_json(const Json &json, std::string_view field) {
    const std::string path(field);
    SelectiveRotationSpec spec;
    const std::string axis = text(require(json, "axis", "pulse", path), "pulse", path + "/axis");
    try {
        spec.axis = parse_axis(axis);
    } catch (const Error &) {
        field_error("pulse", path + "/axis", "expected X, Y or Z");
    }
    spec.m = integer(require(json, "m", "pulse", path), "pulse", path + "/m");
    spec.n = integer(require(json, "n", "pulse", path), "pulse", path + "/n");
    spec.theta = number(require(json, "theta_pi", "pulse", path), "pulse", path + "/theta_pi") * std::numbers::pi;
    try {
        spec.validate();
    } catch (const Error &e) {
        field_error("pulse", path, e.what());
    }
    return spec;
}

Json pulse_program_to_json(const TomographyProtocol &protocol) {
    Json out;
    out["protocol"] = protocol.name;
    out["readouts"] = Json::array();
    for (const auto &readout : protocol.readouts) {
        Json entry;
        entry["product"] = readout.sequence.to_string();
        entry["peaks"] = readout.peaks;
        entry["pulses"] = Json::array();
        for (const auto &pulse : readout.sequence.pulses()) {
            entry["pulses"].push_back(pulse_to_json(pulse));
        }
        out["readouts"].push_back(entry);
    }
    return out;
}

TomographyProtocol pulse_program_from_json(const Json &json, const TomographyProtocol &base, std::string_view source) {
    TomographyProtocol out = base;
    out.readouts.clear();
    const Json &readouts = require(json, "readouts", source, "");
    if (!readouts.is_array()) {
        field_error(source, "readouts", "expected an array");
    }
    for (std::size_t r = 0; r < readouts.size(); ++r) {
        const std::string path = at("readouts", r);
        const Json &pulses = require(readouts[r], "pulses", source, path);
        const Json &peaks = require(readouts[r], "peaks", source, path);
        if (!pulses.is_array() || !peaks.is_array()) {
            field_error(source, path, "expected 'pulses' and 'peaks' arrays");
        }
        Readout readout;
        std::vector<SelectiveRotationSpec> specs;
        for (std::size_t p = 0; p < pulses.size(); ++p) {
            try {
                specs.push_back(pulse_from_json(pulses[p], at(path + "/pulses", p)));
            } catch (const Error &e) {
                throw Error(ErrorCode::ParseError, std::string(source) + ": " + e.what());
            }
        }
        readout.sequence = PulseSequence(std::move(specs));
        for (std::size_t p = 0; p < peaks.size(); ++p) {
            readout.peaks.push_back(integer(peaks[p], source, at(path + "/peaks", p)));
        }
        out.readouts.push_back(std::move(readout));
    }
    if (json.contains("protocol") && json["protocol"].is_string()) {
        out.name = json["protocol"].get<std::string>();
    }
    out.validate();
    return out;
}

Json preset_to_json(const NamedPreset &preset) {
    Json out;
    out["name"] = preset.name;
    out["description"] = preset.description;
    out["omega0_hz"] = preset.params.omega0 / kTwoPi;
    out["omegaQ_hz"] = preset.params.omegaQ / kTwoPi;
    out["gamma"] = preset.params.gamma;
    out["B0_tesla"] = preset.params.B0;
    return out;
}

std::vector<NamedPreset> presets_from_json(const Json &json, std::string_view source) {
    const Json *entries = &json;
    if (json.is_object() && json.contains("presets")) {
        entries = &json["presets"];
    }
    std::vector<NamedPreset> out;
    auto read_one = [&](const Json &entry, const std::string &path) {
        NamedPreset preset;
        preset.name = text(require(entry, "name", source, path), source, path + "/name");
        if (entry.contains("description")) {
            preset.description = text(entry["description"], source, path + "/description");
        }
        preset.params.omega0 = kTwoPi * number(require(entry, "omega0_hz", source, path), source, path + "/omega0_hz");
        preset.params.omegaQ = kTwoPi * number(require(entry, "omegaQ_hz", source, path), source, path + "/omegaQ_hz");
        preset.params.gamma = entry.contains("gamma") ? number(entry["gamma"], source, path + "/gamma") : 0.0;
        preset.params.B0 = entry.contains("B0_tesla") ? number(entry["B0_tesla"], source, path + "/B0_tesla") : 0.0;
        try {
            preset.params.validate();
        } catch (const Error &e) {
            field_error(source, path, e.what());
        }
        out.push_back(std::move(preset));
    };
    if (entries->is_array()) {
        for (std::size_t i = 0; i < entries->size(); ++i) {
            read_one((*entries)[i], at("presets", i));
        }
    } else {
        read_one(*entries, "");
    }
    return out;
}

} // namespace quartit::io
