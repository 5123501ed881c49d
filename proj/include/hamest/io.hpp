#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hamest/protocol.hpp"
#include "hamest/scenarios.hpp"
#include "hamest/spectral.hpp"

namespace hamest {

// JSON conventions: complex matrices and amplitude vectors are row-major
// arrays of [re, im] pairs; layouts spell out their three dimensions.  Parse
// errors surface as hamest::Error so callers can map them to a config failure.

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);

nlohmann::json operator_to_json(const HermitianOperator& h);
HermitianOperator operator_from_json(const nlohmann::json& j);

nlohmann::json layout_to_json(const SpaceLayout& layout);
SpaceLayout layout_from_json(const nlohmann::json& j);

nlohmann::json state_to_json(const QuantumState& state);
QuantumState state_from_json(const nlohmann::json& j);

nlohmann::json protocol_to_json(const DiscriminationProtocol& protocol);
DiscriminationProtocol protocol_from_json(const nlohmann::json& j);

nlohmann::json trajectory_to_json(const Trajectory& trajectory);

nlohmann::json scenario_to_json(const ScenarioResult& result);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

// Operator from a JSON file ({"dim": n, "entries": [[re, im], ...]}).
HermitianOperator load_operator(const std::string& path);

// Shortest round-trippable decimal form, identical on every run.
std::string format_double(double value);

void write_csv(std::ostream& out, const std::vector<std::string>& columns,
               const std::vector<std::vector<double>>& rows);
void write_csv_file(const std::string& path, const std::vector<std::string>& columns,
                    const std::vector<std::vector<double>>& rows);

} // namespace hamest
