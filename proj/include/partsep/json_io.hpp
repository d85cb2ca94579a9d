#pragma once

#include <string>

#include <json.hpp>

#include "partsep/quantum.hpp"

namespace partsep {

using json = nlohmann::ordered_json;

json to_json(const StateVector& psi);
json to_json(const DensityMatrix& rho);
json complex_array(const Eigen::VectorXcd& v);

StateVector state_from_json(const json& j);
/// Accepts a density matrix object, or a state object (turned into its projector).
DensityMatrix density_from_json(const json& j);

/// Parses text; malformed JSON becomes a ValidationError naming the byte offset.
json parse_json(const std::string& text);
json read_json_file(const std::string& path);

}  // namespace partsep
