#include "hamest/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <system_error>

namespace hamest {

namespace {

nlohmann::json complex_array_to_json(const Vector& v) {
    nlohmann::json entries = nlohmann::json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) {
        entries.push_back({v(i).real(), v(i).imag()});
    }
    return entries;
}

Vector complex_array_from_json(const nlohmann::json& j) {
    if (!j.is_array()) {
        throw Error("json: expected an array of [re, im] pairs");
    }
    Vector v(j.size());
    Eigen::Index i = 0;
    for (const auto& entry : j) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() ||
            !entry[1].is_number()) {
            throw Error("json: each complex entry must be a [re, im] pair");
        }
        v(i++) = Complex(entry[0].get<double>(), entry[1].get<double>());
    }
    return v;
}

} // namespace

nlohmann::json matrix_to_json(const Matrix& m) {
    Vector flat(m.size());
    Eigen::Index pos = 0;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.cols(); ++c) {
            flat(pos++) = m(r, c);
        }
    }
    return {{"dim", m.rows()}, {"entries", complex_array_to_json(flat)}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
        throw Error("json: matrix needs \"dim\" and \"entries\"");
    }
    const auto dim = j.at("dim").get<Eigen::Index>();
    const Vector flat = complex_array_from_json(j.at("entries"));
    if (dim < 1 || flat.size() != dim * dim) {
        throw Error("json: matrix entry count does not match dim^2");
    }
    Matrix m(dim, dim);
    Eigen::Index pos = 0;
    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = 0; c < dim; ++c) {
            m(r, c) = flat(pos++);
        }
    }
    return m;
}

nlohmann::json operator_to_json(const HermitianOperator& h) {
    return matrix_to_json(h.matrix());
}

HermitianOperator operator_from_json(const nlohmann::json& j) {
    return HermitianOperator(matrix_from_json(j));
}

nlohmann::json layout_to_json(const SpaceLayout& layout) {
    return {{"box_dim", layout.box_dim},
            {"nobox_dim", layout.nobox_dim},
            {"ancilla_dim", layout.ancilla_dim}};
}

SpaceLayout layout_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("box_dim") || !j.contains("nobox_dim") ||
        !j.contains("ancilla_dim")) {
        throw Error("json: layout needs box_dim, nobox_dim and ancilla_dim");
    }
    return SpaceLayout(j.at("box_dim").get<int>(), j.at("nobox_dim").get<int>(),
                       j.at("ancilla_dim").get<int>());
}

nlohmann::json state_to_json(const QuantumState& state) {
    return {{"layout", layout_to_json(state.layout())},
            {"amplitudes", complex_array_to_json(state.amplitudes())}};
}

QuantumState state_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("layout") || !j.contains("amplitudes")) {
        throw Error("json: state needs \"layout\" and \"amplitudes\"");
    }
    return QuantumState(layout_from_json(j.at("layout")),
                        complex_array_from_json(j.at("amplitudes")));
}

nlohmann::json protocol_to_json(const DiscriminationProtocol& protocol) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& step : protocol.steps()) {
        steps.push_back({{"dwell", step.dwell()}, {"control", matrix_to_json(step.control())}});
    }
    return {{"layout", layout_to_json(protocol.layout())},
            {"initial", complex_array_to_json(protocol.initial().amplitudes())},
            {"steps", std::move(steps)}};
}

DiscriminationProtocol protocol_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("layout") || !j.contains("initial") ||
        !j.contains("steps")) {
        throw Error("json: protocol needs \"layout\", \"initial\" and \"steps\"");
    }
    const SpaceLayout layout = layout_from_json(j.at("layout"));
    QuantumState initial(layout, complex_array_from_json(j.at("initial")));
    std::vector<ProtocolStep> steps;
    for (const auto& step : j.at("steps")) {
        if (!step.is_object() || !step.contains("dwell") || !step.contains("control")) {
            throw Error("json: each protocol step needs \"dwell\" and \"control\"");
        }
        steps.emplace_back(step.at("dwell").get<double>(),
                           matrix_from_json(step.at("control")));
    }
    return DiscriminationProtocol(layout, std::move(initial), std::move(steps));
}

nlohmann::json trajectory_to_json(const Trajectory& trajectory) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < trajectory.times.size(); ++i) {
        rows.push_back({{"time", trajectory.times[i]},
                        {"re_overlap", trajectory.overlaps[i].real()},
                        {"im_overlap", trajectory.overlaps[i].imag()},
                        {"theta", trajectory.thetas[i]}});
    }
    return rows;
}

nlohmann::json scenario_to_json(const ScenarioResult& result) {
    nlohmann::json sweep = nlohmann::json::array();
    for (const auto& row : result.sweep_rows) {
        nlohmann::json entry;
        for (std::size_t c = 0; c < result.sweep_columns.size() && c < row.size(); ++c) {
            entry[result.sweep_columns[c]] = row[c];
        }
        sweep.push_back(std::move(entry));
    }
    return {{"name", result.name},
            {"metrics", result.metrics},
            {"passed", result.passed},
            {"sweep", std::move(sweep)}};
}

nlohmann::json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open file: " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::parse_error& e) {
        throw Error("cannot parse " + path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot open file for writing: " + path);
    }
    out << j.dump(2) << '\n';
}

HermitianOperator load_operator(const std::string& path) {
    return operator_from_json(load_json_file(path));
}

std::string format_double(double value) {
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    if (ec != std::errc()) {
        throw Error("format_double: conversion failed");
    }
    return std::string(buf, end);
}

void write_csv(std::ostream& out, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows) {
    for (std::size_t c = 0; c < columns.size(); ++c) {
        out << (c ? "," : "") << columns[c];
    }
    out << '\n';
    for (const auto& row : rows) {
        if (row.size() != columns.size()) {
            throw DimensionError("write_csv: row width does not match header");
        }
        for (std::size_t c = 0; c < row.size(); ++c) {
            out << (c ? "," : "") << format_double(row[c]);
        }
        out << '\n';
    }
}

void write_csv_file(const std::string& path, const std::vector<std::string>& columns,
                    const std::vector<std::vector<double>>& rows) {
    std::ofstream out(path);
    if (!out) {
        throw Error("cannot open file for writing: " + path);
    }
    write_csv(out, columns, rows);
}

} // namespace hamest
