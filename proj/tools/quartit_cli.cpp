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

// quartit: command-line front end for the tomography library.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "quartit/dynamics.hpp"
#include "quartit/error.hpp"
#include "quartit/io.hpp"
#include "quartit/pulse_compile.hpp"
#include "quartit/state_vector.hpp"
#include "quartit/tomography.hpp"

namespace {

using namespace quartit;
using io::Json;

enum class Format { Json, Csv, Pretty };

struct Common {
    std::string format; // empty picks the subcommand default
    std::string output;
};

Format parse_format(const std::string &name) {
    if (name.empty() || name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "pretty") return Format::Pretty;
    throw Error(ErrorCode::InvalidInput, "unknown format '" + name + "' (json, csv, pretty)");
}

std::string num(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

std::string csv_field(const std::string &text) {
    if (text.find_first_of(",\"\n") == std::string::npos) {
        return text;
    }
    std::string out = "\"";
    for (char c : text) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

std::filesystem::path resolve_output(const std::string &output) {
    std::filesystem::path path(output);
    if (path.is_relative()) {
        if (const char *dir = std::getenv("QUARTIT_OUTPUT_DIR"); dir != nullptr && *dir != '\0') {
            return std::filesystem::path(dir) / path;
        }
    }
    return path;
}

void emit(const Common &common, const std::string &content) {
    if (common.output.empty() || common.output == "-") {
        std::cout << content;
        return;
    }
    io::write_text_file(resolve_output(common.output), content);
}

Json vector_json(const RealVector &v) {
    Json out = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        out.push_back(v(i));
    }
    return out;
}

std::string fingerprint(const RealVector &spectrum) {
    std::string out;
    for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
        char buffer[32];
        std::snprintf(buffer, sizeof buffer, "%.9f", spectrum(i));
        out += (i ? "," : "") + std::string(buffer);
    }
    return out;
}

std::string column_name(int component) { return component_label(component); }

Json kappa_json(double kappa) {
    if (std::isinf(kappa)) {
        return "inf";
    }
    return kappa;
}

// protocols ----------------------------------------------------------------

void cmd_protocols(const Common &common) {
    const Format format = parse_format(common.format);
    const auto &catalog = protocol_catalog();
    if (format == Format::Json) {
        Json out = Json::array();
        for (const auto &p : catalog) {
            Json entry;
            entry["name"] = p.name;
            entry["description"] = p.description;
            entry["target"] = std::string(to_string(p.target));
            entry["rotations"] = p.readouts.size();
            entry["normalization"] = std::string(to_string(p.normalization));
            entry["default_s"] = {{"ideal", 1.0}, {"theoretical", 1.0}, {"cyclops", p.cyclops_scaling}};
            entry["readouts"] = Json::array();
            for (const auto &r : p.readouts) {
                entry["readouts"].push_back({{"product", r.sequence.to_string()}, {"peaks", r.peaks}});
            }
            out.push_back(entry);
        }
        emit(common, io::dump({{"protocols", out}}));
        return;
    }
    std::ostringstream text;
    if (format == Format::Csv) {
        text << "name,target,rotations,normalization,cyclops_s\n";
        for (const auto &p : catalog) {
            text << p.name << ',' << to_string(p.target) << ',' << p.readouts.size() << ','
                 << to_string(p.normalization) << ',' << num(p.cyclops_scaling) << '\n';
        }
    } else {
        for (const auto &p : catalog) {
            text << p.name << "  (" << to_string(p.target) << ", " << p.readouts.size() << " rotations";
            if (p.normalization == Normalization::Single) text << " + normalization";
            if (p.normalization == Normalization::PerReadout) text << " + per-readout normalization";
            text << ", cyclops s = " << num(p.cyclops_scaling) << ")\n    " << p.description << '\n';
        }
    }
    emit(common, text.str());
}

// inspect ------------------------------------------------------------------

struct ProtocolArgs {
    std::string protocol;
    std::string model = "ideal";
    std::optional<double> s;
};

void add_protocol_args(CLI::App *cmd, ProtocolArgs &args) {
    cmd->add_option("-p,--protocol", args.protocol, "protocol name (see `protocols`)")->required();
    cmd->add_option("-m,--model", args.model, "observation model: theoretical, ideal, cyclops");
    cmd->add_option("-s,--scaling", args.s, "normalization-row scaling s");
}

void cmd_inspect(const Common &common, const ProtocolArgs &args) {
    const Format format = parse_format(common.format);
    const auto &protocol = protocol_catalog(args.protocol);
    const auto model = parse_observation_model(args.model);
    const CoefficientMatrix m = build_coefficient_matrix(protocol, model, args.s);
    const RealVector spectrum = m.gram_spectrum();
    const double kappa = m.kappa();

    if (format == Format::Json) {
        Json out;
        out["protocol"] = protocol.name;
        out["model"] = std::string(to_string(model));
        out["s"] = m.scaling_s;
        out["rows"] = m.a.rows();
        out["cols"] = m.a.cols();
        out["normalization_rows"] = m.normalization_rows;
        out["deviation_form"] = m.deviation_form;
        Json columns = Json::array();
        for (int c : m.columns) columns.push_back(column_name(c));
        out["columns"] = columns;
        Json rows = Json::array();
        for (Eigen::Index i = 0; i < m.a.rows(); ++i) {
            rows.push_back({{"label", m.row_labels[static_cast<std::size_t>(i)]},
                            {"coefficients", vector_json(m.a.row(i).transpose())}});
        }
        out["a"] = rows;
        out["gram_singular_values"] = vector_json(spectrum);
        out["kappa"] = kappa_json(kappa);
        out["kappa_a"] = kappa_json(m.kappa_a());
        out["fingerprint"] = fingerprint(spectrum);
        emit(common, io::dump(out));
        return;
    }
    std::ostringstream text;
    if (format == Format::Csv) {
        text << "label";
        for (int c : m.columns) text << ',' << csv_field(column_name(c));
        text << '\n';
        for (Eigen::Index i = 0; i < m.a.rows(); ++i) {
            text << csv_field(m.row_labels[static_cast<std::size_t>(i)]);
            for (Eigen::Index j = 0; j < m.a.cols(); ++j) text << ',' << num(m.a(i, j));
            text << '\n';
        }
    } else {
        text << protocol.name << " / " << to_string(model) << "  s = " << num(m.scaling_s) << '\n';
        text << "A: " << m.a.rows() << " x " << m.a.cols() << '\n';
        for (Eigen::Index i = 0; i < m.a.rows(); ++i) {
            char label[48];
            std::snprintf(label, sizeof label, "%-28s", m.row_labels[static_cast<std::size_t>(i)].c_str());
            text << "  " << label;
            for (Eigen::Index j = 0; j < m.a.cols(); ++j) {
                char cell[16];
                std::snprintf(cell, sizeof cell, " %8.4f", m.a(i, j));
                text << cell;
            }
            text << '\n';
        }
        text << "svd(A^T A): " << fingerprint(spectrum) << '\n';
        text << "kappa(A^T A) = " << (std::isinf(kappa) ? std::string("inf") : num(kappa)) << '\n';
    }
    emit(common, text.str());
}

// simulate -----------------------------------------------------------------

struct SimulateArgs {
    ProtocolArgs protocol;
    std::string state;
    std::optional<std::uint64_t> random_state;
    std::string purity = "mixed";
    double sigma = 0.0;
    std::uint64_t seed = 1;
};

// Accepts a bare state file or a simulate output, which nests it under "state".
DensityMatrix load_state(const std::string &path) {
    const Json json = io::read_json_file(path);
    if (json.is_object() && json.contains("state") && !json.contains("x") && !json.contains("rho")) {
        return io::density_matrix_from_json(json["state"], path);
    }
    return io::density_matrix_from_json(json, path);
}

void cmd_simulate(const Common &common, const SimulateArgs &args) {
    const auto &protocol = protocol_catalog(args.protocol.protocol);
    const auto model = parse_observation_model(args.protocol.model);
    if (args.sigma < 0.0 || !std::isfinite(args.sigma)) {
        throw Error(ErrorCode::InvalidInput, "noise sigma must be nonnegative");
    }
    DensityMatrix rho;
    if (!args.state.empty()) {
        rho = load_state(args.state);
    } else if (args.random_state) {
        PurityMode mode = PurityMode::Mixed;
        if (args.purity == "pure") {
            mode = PurityMode::Pure;
        } else if (args.purity != "mixed") {
            throw Error(ErrorCode::InvalidInput, "purity must be 'pure' or 'mixed'");
        }
        rho = random_density_matrix(*args.random_state, mode);
    } else {
        throw Error(ErrorCode::InvalidInput, "give --state FILE or --random-state SEED");
    }
    const CoefficientMatrix m = build_coefficient_matrix(protocol, model, args.protocol.s);
    std::mt19937_64 rng(args.seed);
    const RealVector b =
        add_measurement_noise(simulate_observations(rho, protocol, model, m.scaling_s), m, args.sigma, rng);

    io::ObservationFile file{protocol.name, std::string(to_string(model)), m.scaling_s, m.row_labels, b};
    if (parse_format(common.format) == Format::Csv) {
        std::ostringstream text;
        text << "label,value\n";
        for (std::size_t i = 0; i < file.labels.size(); ++i) {
            text << csv_field(file.labels[i]) << ',' << num(b(static_cast<Eigen::Index>(i))) << '\n';
        }
        emit(common, text.str());
        return;
    }
    Json out = io::observations_to_json(file);
    out["noise_sigma"] = args.sigma;
    out["state"] = io::density_matrix_to_json(rho);
    emit(common, io::dump(out));
}

// reconstruct --------------------------------------------------------------

struct ReconstructArgs {
    std::string observations;
    std::string reference;
    bool clip = false;
};

void cmd_reconstruct(const Common &common, const ReconstructArgs &args) {
    const Json json = io::read_json_file(args.observations);
    const io::ObservationFile file = io::observations_from_json(json, args.observations);
    const auto &protocol = protocol_catalog(file.protocol);
    const auto model = parse_observation_model(file.model);
    const CoefficientMatrix m = build_coefficient_matrix(protocol, model, file.scaling_s);
    if (file.values.size() != m.a.rows()) {
        throw Error(ErrorCode::DimensionMismatch, "observation file has " + std::to_string(file.values.size()) +
                                                      " rows, protocol " + protocol.name + " expects " +
                                                      std::to_string(m.a.rows()));
    }
    for (std::size_t i = 0; i < file.labels.size(); ++i) {
        if (file.labels[i] != m.row_labels[i]) {
            throw Error(ErrorCode::ParseError, args.observations + ": field 'rows/" + std::to_string(i) +
                                                   "/label': expected '" + m.row_labels[i] + "'");
        }
    }
    const ReconstructionResult result = reconstruct(file.values, m);

    Json out;
    out["protocol"] = protocol.name;
    out["model"] = std::string(to_string(model));
    out["s"] = m.scaling_s;
    out["kappa"] = kappa_json(result.kappa);
    out["residual_norm"] = result.residual_norm;
    out["trace"] = result.rho_hat.trace().real();
    out["rho_hat"] = io::density_matrix_to_json(result.rho_hat);
    if (args.clip) {
        out["rho_clipped"] = io::density_matrix_to_json(clip_to_physical(result.rho_hat));
    }
    if (!args.reference.empty()) {
        const DensityMatrix reference = load_state(args.reference);
        out["fidelity"] = fidelity(reference, result.rho_hat);
        out["max_abs_error"] = (result.rho_hat - reference).cwiseAbs().maxCoeff();
        const RealVector b_true = simulate_observations(reference, protocol, model, m.scaling_s);
        const ErrorBoundReport bound =
            error_bound(m, m.unknowns(reference), result.unknowns_hat, b_true, file.values);
        out["error_bound"] = {{"relative_error", bound.relative_error},
                              {"data_ratio", bound.data_ratio},
                              {"lower", bound.lower},
                              {"upper", bound.upper},
                              {"kappa", kappa_json(bound.kappa)},
                              {"holds", bound.holds}};
    }
    if (parse_format(common.format) == Format::Pretty) {
        std::ostringstream text;
        text << protocol.name << " / " << to_string(model) << "  kappa = " << num(result.kappa)
             << "  residual = " << num(result.residual_norm) << '\n';
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                char cell[48];
                std::snprintf(cell, sizeof cell, " %9.6f%+9.6fi", result.rho_hat(r, c).real(),
                              result.rho_hat(r, c).imag());
                text << cell;
            }
            text << '\n';
        }
        if (out.contains("fidelity")) {
            text << "fidelity = " << num(out["fidelity"].get<double>()) << '\n';
            text << "error bound holds: " << (out["error_bound"]["holds"].get<bool>() ? "yes" : "no") << '\n';
        }
        emit(common, text.str());
        return;
    }
    emit(common, io::dump(out));
}

// sweep-s ------------------------------------------------------------------

struct SweepArgs {
    ProtocolArgs protocol;
    double from = 0.05;
    double to = 1.0;
    double step = 0.01;
};

void cmd_sweep(const Common &common, const SweepArgs &args) {
    const auto &protocol = protocol_catalog(args.protocol.protocol);
    const auto model = parse_observation_model(args.protocol.model);
    const auto grid = scaling_grid(args.from, args.to, args.step);
    const ScalingResult result = optimize_scaling(protocol, model, grid);
    const Format format = parse_format(common.format.empty() ? "csv" : common.format);
    if (format == Format::Json) {
        Json out;
        out["protocol"] = protocol.name;
        out["model"] = std::string(to_string(model));
        out["s_star"] = result.s_star;
        out["kappa_star"] = kappa_json(result.kappa_star);
        out["heuristic_all_entries"] = {{"s", result.heuristic_all_entries},
                                        {"kappa", kappa_json(result.kappa_at_heuristic_all)}};
        out["heuristic_population"] = {{"s", result.heuristic_population},
                                       {"kappa", kappa_json(result.kappa_at_heuristic_population)}};
        Json sweep = Json::array();
        for (const auto &point : result.sweep) {
            sweep.push_back({{"s", point.s}, {"kappa", kappa_json(point.kappa)}});
        }
        out["sweep"] = sweep;
        emit(common, io::dump(out));
        return;
    }
    std::ostringstream text;
    text << "s,kappa\n";
    for (const auto &point : result.sweep) {
        text << num(point.s) << ',' << (std::isinf(point.kappa) ? std::string("inf") : num(point.kappa)) << '\n';
    }
    if (format == Format::Pretty) {
        text << "# minimum kappa " << num(result.kappa_star) << " at s = " << num(result.s_star) << '\n';
        text << "# max-entry heuristic s = " << num(result.heuristic_all_entries)
             << " (kappa " << num(result.kappa_at_heuristic_all) << ")\n";
        text << "# population-column heuristic s = " << num(result.heuristic_population)
             << " (kappa " << num(result.kappa_at_heuristic_population) << ")\n";
    }
    emit(common, text.str());
}

// compile ------------------------------------------------------------------

struct CompileArgs {
    ProtocolArgs protocol;
    int max_order = 1;
    std::string strategy = "chain";
};

Json census_json(const PhotonCensus &census) {
    return {{"1", census.counts[1]}, {"2", census.counts[2]}, {"3", census.counts[3]}};
}

void cmd_compile(const Common &common, const CompileArgs &args) {
    const auto &protocol = protocol_catalog(args.protocol.protocol);
    const auto model = parse_observation_model(args.protocol.model);
    const CompileResult result = compile_protocol(protocol, args.max_order, parse_compile_strategy(args.strategy));
    const CoefficientMatrix before = build_coefficient_matrix(protocol, model, args.protocol.s);
    const CoefficientMatrix after = build_coefficient_matrix(result.protocol, model, args.protocol.s);
    const auto relation = compare_coefficient_matrices(before, after);

    Json out = io::pulse_program_to_json(result.protocol);
    out["source_protocol"] = protocol.name;
    out["strategy"] = std::string(to_string(result.strategy));
    out["max_photon_order"] = result.max_photon_order;
    out["exact_rewrites"] = result.exact;
    out["photon_orders_before"] = census_json(photon_order_report(protocol));
    out["photon_orders_after"] = census_json(photon_order_report(result.protocol));
    Json depth = Json::array();
    for (const auto &d : result.depth) {
        depth.push_back({{"original", d.original},
                         {"compiled", d.compiled},
                         {"pulses_before", d.pulses_before},
                         {"pulses_after", d.pulses_after}});
    }
    out["replacement_depth"] = depth;
    out["model"] = std::string(to_string(model));
    out["kappa_original"] = kappa_json(before.kappa());
    out["kappa_compiled"] = kappa_json(after.kappa());
    out["coefficient_matrix_relation"] = std::string(to_string(relation));

    if (parse_format(common.format) == Format::Pretty) {
        std::ostringstream text;
        text << protocol.name << " -> max photon order " << args.max_order << " (" << args.strategy << ")\n";
        for (const auto &d : result.depth) {
            text << "  " << d.original << "  =>  " << d.compiled << '\n';
        }
        text << "kappa " << num(before.kappa()) << " -> " << num(after.kappa()) << " (" << to_string(relation)
             << ")\n";
        emit(common, text.str());
        return;
    }
    emit(common, io::dump(out));
}

// presets ------------------------------------------------------------------

void cmd_presets(const Common &common, const std::string &file) {
    const std::vector<NamedPreset> presets =
        file.empty() ? spin_system_presets() : io::presets_from_json(io::read_json_file(file), file);
    if (parse_format(common.format) == Format::Json) {
        Json out = Json::array();
        for (const auto &preset : presets) {
            Json entry = io::preset_to_json(preset);
            entry["warnings"] = preset.params.warnings();
            out.push_back(entry);
        }
        emit(common, io::dump({{"presets", out}}));
        return;
    }
    std::ostringstream text;
    text << "name,omega0_hz,omegaQ_hz,gamma,B0_tesla\n";
    for (const auto &preset : presets) {
        const Json entry = io::preset_to_json(preset);
        text << preset.name << ',' << num(entry["omega0_hz"].get<double>()) << ','
             << num(entry["omegaQ_hz"].get<double>()) << ',' << num(preset.params.gamma) << ','
             << num(preset.params.B0) << '\n';
    }
    emit(common, text.str());
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"quartit: state tomography for a spin-3/2 quartit"};
    app.require_subcommand(1);
    Common common;
    app.add_option("-f,--format", common.format, "output format: json, csv, pretty (default json; csv for sweep-s)");
    app.add_option("-o,--output", common.output,
                   "output file (relative paths resolve under $QUARTIT_OUTPUT_DIR when set)");

    auto *protocols = app.add_subcommand("protocols", "list the protocol catalog");

    ProtocolArgs inspect_args;
    auto *inspect = app.add_subcommand("inspect", "coefficient matrix, spectrum and condition number");
    add_protocol_args(inspect, inspect_args);

    SimulateArgs simulate_args;
    auto *simulate = app.add_subcommand("simulate", "forward-simulate observations for a state");
    add_protocol_args(simulate, simulate_args.protocol);
    simulate->add_option("--state", simulate_args.state, "density matrix JSON file");
    simulate->add_option("--random-state", simulate_args.random_state, "seed for a random test state");
    simulate->add_option("--purity", simulate_args.purity, "random state kind: pure or mixed");
    simulate->add_option("--sigma", simulate_args.sigma, "Gaussian noise standard deviation");
    simulate->add_option("--seed", simulate_args.seed, "noise seed");

    ReconstructArgs reconstruct_args;
    auto *reconstruct_cmd = app.add_subcommand("reconstruct", "least-squares reconstruction from observations");
    reconstruct_cmd->add_option("--observations", reconstruct_args.observations, "observation JSON file")
        ->required();
    reconstruct_cmd->add_option("--reference", reconstruct_args.reference, "reference density matrix JSON file");
    reconstruct_cmd->add_flag("--clip", reconstruct_args.clip, "also report the eigenvalue-clipped estimate");

    SweepArgs sweep_args;
    auto *sweep = app.add_subcommand("sweep-s", "condition number against the scaling s (CSV)");
    add_protocol_args(sweep, sweep_args.protocol);
    sweep->add_option("--from", sweep_args.from, "first s");
    sweep->add_option("--to", sweep_args.to, "last s");
    sweep->add_option("--step", sweep_args.step, "grid step");

    CompileArgs compile_args;
    auto *compile = app.add_subcommand("compile", "rewrite multiphoton pulses into a pulse program");
    add_protocol_args(compile, compile_args.protocol);
    compile->add_option("--max-order", compile_args.max_order, "maximum photon order (1 or 2)");
    compile->add_option("--strategy", compile_args.strategy, "chain, swap_top, nested or short_swap");

    std::string preset_file;
    auto *presets = app.add_subcommand("presets", "spin-system parameter presets");
    presets->add_option("--file", preset_file, "preset JSON file to validate and list");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        std::cerr << "error: INVALID_INPUT: " << e.what() << '\n';
        return 2;
    }

    try {
        if (*protocols) cmd_protocols(common);
        if (*inspect) cmd_inspect(common, inspect_args);
        if (*simulate) cmd_simulate(common, simulate_args);
        if (*reconstruct_cmd) cmd_reconstruct(common, reconstruct_args);
        if (*sweep) cmd_sweep(common, sweep_args);
        if (*compile) cmd_compile(common, compile_args);
        if (*presets) cmd_presets(common, preset_file);
    } catch (const Error &e) {
        std::cerr << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
        return 1;
    } catch (const std::exception &e) {
        std::cerr << "error: INTERNAL: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
