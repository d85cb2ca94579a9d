#include "partsep/json_io.hpp"

#include <fstream>
#include <sstream>

#include "partsep/errors.hpp"

namespace partsep {

namespace {

json cplx_json(cplx z) { return json::array({z.real(), z.imag()}); }

cplx cplx_from(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw ValidationError("json: complex numbers are [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

Dims dims_from(const json& j) {
  if (!j.contains("dims") || !j["dims"].is_array()) throw ValidationError("json: missing \"dims\" array");
  Dims d;
  for (const auto& x : j["dims"]) {
    if (!x.is_number_integer()) throw ValidationError("json: dims must be integers");
    d.push_back(x.get<int>());
  }
  total_dim(d);
  return d;
}

}  // namespace

json complex_array(const Eigen::VectorXcd& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(cplx_json(v(i)));
  return a;
}

json to_json(const StateVector& psi) {
  json j;
  j["dims"] = psi.dims;
  j["amplitudes"] = complex_array(psi.amp);
  return j;
}

json to_json(const DensityMatrix& rho) {
  json j;
  j["dims"] = rho.dims;
  json rows = json::array();
  for (Eigen::Index r = 0; r < rho.mat.rows(); ++r) rows.push_back(complex_array(rho.mat.row(r).transpose()));
  j["matrix"] = rows;
  return j;
}

StateVector state_from_json(const json& j) {
  auto d = dims_from(j);
  if (!j.contains("amplitudes") || !j["amplitudes"].is_array()) throw ValidationError("json: missing \"amplitudes\" array");
  const auto& a = j["amplitudes"];
  if (static_cast<int>(a.size()) != total_dim(d)) throw DimensionError("json: amplitude count does not match dims");
  Eigen::VectorXcd v(static_cast<Eigen::Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) v(static_cast<Eigen::Index>(i)) = cplx_from(a[i]);
  return StateVector(std::move(d), std::move(v));
}

DensityMatrix density_from_json(const json& j) {
  if (j.contains("amplitudes")) return DensityMatrix::pure(state_from_json(j));
  auto d = dims_from(j);
  if (!j.contains("matrix") || !j["matrix"].is_array()) throw ValidationError("json: missing \"matrix\" array");
  const auto& m = j["matrix"];
  const int D = total_dim(d);
  if (static_cast<int>(m.size()) != D) throw DimensionError("json: matrix row count does not match dims");
  Eigen::MatrixXcd M(D, D);
  for (int r = 0; r < D; ++r) {
    const auto& row = m[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != D) throw DimensionError("json: matrix row length does not match dims");
    for (int c = 0; c < D; ++c) M(r, c) = cplx_from(row[static_cast<std::size_t>(c)]);
  }
  return DensityMatrix(std::move(d), std::move(M));
}

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError("malformed JSON at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ArgumentError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

}  // namespace partsep
