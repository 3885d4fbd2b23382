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

#include "quartit/pulse_sequence.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <sstream>

#include "quartit/error.hpp"

namespace quartit {

namespace {

constexpr double kPi = std::numbers::pi;

bool near(double a, double b) { return std::abs(a - b) <= 1e-12; }

std::string format_pi_multiple(double theta) {
    std::ostringstream out;
    out.precision(12);
    out << theta / kPi;
    return out.str();
}

SelectiveRotationSpec parse_token(std::string_view token) {
    std::size_t pos = 0;
    Axis axis = Axis::Y;
    double theta = 0.0;
    bool swap = false;
    if (token.starts_with("Sd")) {
        axis = Axis::Y;
        theta = -kPi;
        swap = true;
        pos = 2;
    } else if (!token.empty() && token[0] == 'S') {
        theta = kPi;
        swap = true;
        pos = 1;
    } else if (!token.empty() && (token[0] == 'X' || token[0] == 'Y' || token[0] == 'Z')) {
        axis = parse_axis(token.substr(0, 1));
        theta = kPi / 2.0;
        pos = 1;
    } else {
        throw Error(ErrorCode::ParseError, "unrecognized pulse token '" + std::string(token) + "'");
    }
    if (token.size() < pos + 2 || !std::isdigit(static_cast<unsigned char>(token[pos])) ||
        !std::isdigit(static_cast<unsigned char>(token[pos + 1]))) {
        throw Error(ErrorCode::ParseError, "pulse token '" + std::string(token) + "' needs two level digits");
    }
    int m = token[pos] - '0';
    int n = token[pos + 1] - '0';
    pos += 2;
    bool explicit_angle = false;
    if (pos < token.size()) {
        if (swap || token[pos] != '(' || token.back() != ')') {
            throw Error(ErrorCode::ParseError, "malformed pulse token '" + std::string(token) + "'");
        }
        const std::string_view inner = token.substr(pos + 1, token.size() - pos - 2);
        double multiple = 0.0;
        const auto [ptr, ec] = std::from_chars(inner.data(), inner.data() + inner.size(), multiple);
        if (ec != std::errc() || ptr != inner.data() + inner.size()) {
            throw Error(ErrorCode::ParseError, "bad angle in pulse token '" + std::string(token) + "'");
        }
        theta = multiple * kPi;
        explicit_angle = true;
    }
    if (axis == Axis::Z && !explicit_angle) {
        throw Error(ErrorCode::ParseError, "Z pulse '" + std::string(token) + "' needs an explicit angle");
    }
    if (m > n && swap) {
        std::swap(m, n);
    }
    SelectiveRotationSpec spec{axis, m, n, theta};
    spec.validate();
    return spec;
}

} // namespace

PulseSequence::PulseSequence(std::vector<SelectiveRotationSpec> pulses) : pulses_(std::move(pulses)) {
    for (const auto &pulse : pulses_) {
        pulse.validate();
    }
}

PulseSequence PulseSequence::from_operator_product(const std::vector<SelectiveRotationSpec> &factors) {
    return PulseSequence(std::vector<SelectiveRotationSpec>(factors.rbegin(), factors.rend()));
}

PulseSequence PulseSequence::parse(std::string_view product) {
    std::vector<SelectiveRotationSpec> factors;
    std::size_t i = 0;
    while (i < product.size()) {
        if (std::isspace(static_cast<unsigned char>(product[i])) || product[i] == '*') {
            ++i;
            continue;
        }
        // A token runs to the next space, '*' or the start of the next letter.
        std::size_t j = i + 1;
        if (product.substr(i, 2) == "Sd") {
            j = i + 2;
        }
        bool in_paren = false;
        while (j < product.size()) {
            const char c = product[j];
            if (c == '(') in_paren = true;
            if (c == ')') {
                in_paren = false;
                ++j;
                break;
            }
            if (!in_paren && (std::isspace(static_cast<unsigned char>(c)) || c == '*' ||
                              std::isalpha(static_cast<unsigned char>(c)))) {
                break;
            }
            ++j;
        }
        const std::string_view token = product.substr(i, j - i);
        if (token != "I") {
            factors.push_back(parse_token(token));
        }
        i = j;
    }
    return from_operator_product(factors);
}

UnitaryGate PulseSequence::unitary() const {
    UnitaryGate u;
    for (const auto &pulse : pulses_) {
        u = selective_rotation(pulse) * u;
    }
    return u;
}

int PulseSequence::max_photon_order() const noexcept {
    int order = 0;
    for (const auto &pulse : pulses_) {
        order = std::max(order, pulse.photon_order());
    }
    return order;
}

std::string PulseSequence::to_string() const {
    if (pulses_.empty()) {
        return "I";
    }
    std::string out;
    for (auto it = pulses_.rbegin(); it != pulses_.rend(); ++it) {
        if (!out.empty()) {
            out += ' ';
        }
        out += pulse_token(*it);
    }
    return out;
}

PulseSequence PulseSequence::then(const PulseSequence &later) const {
    std::vector<SelectiveRotationSpec> all = pulses_;
    all.insert(all.end(), later.pulses_.begin(), later.pulses_.end());
    return PulseSequence(std::move(all));
}

std::string pulse_token(const SelectiveRotationSpec &spec) {
    const std::string levels = std::to_string(spec.m) + std::to_string(spec.n);
    if (spec.axis == Axis::Y && near(spec.theta, kPi)) {
        return "S" + levels;
    }
    if (spec.axis == Axis::Y && near(spec.theta, -kPi)) {
        return "Sd" + levels;
    }
    std::string token = std::string(quartit::to_string(spec.axis)) + levels;
    if (spec.axis != Axis::Z && near(spec.theta, kPi / 2.0)) {
        return token;
    }
    return token + "(" + format_pi_multiple(spec.theta) + ")";
}

SelectiveRotationSpec swap_pulse(int m, int n) { return {Axis::Y, std::min(m, n), std::max(m, n), kPi}; }

SelectiveRotationSpec swap_pulse_dagger(int m, int n) {
    return {Axis::Y, std::min(m, n), std::max(m, n), -kPi};
}

SelectiveRotationSpec half_pi_pulse(Axis axis, int m, int n) { return {axis, m, n, kPi / 2.0}; }

} // namespace quartit
