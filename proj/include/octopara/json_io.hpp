#pragma once

#include <string>

#include <json.hpp>

#include "octopara/funcalc.hpp"
#include "octopara/spectral.hpp"

namespace octopara {

// Wire formats:
//   octonion        [x0, ..., x7]
//   vector          {"dim": n, "components": [[8 reals] x n]}
//   operator        {"dim": n, "core": [n*8n reals]} or {"dim": n, "matrix": [8n*8n reals]}
//   decomposition   {"pairs": [{"lambda", "z", "axis"}], "kernel": [...], "residual"}
//   function        {"values": [{"lambda": r, "f": [8 reals]}]}
// Matrices are row-major flat arrays.

nlohmann::json to_json(const Octonion& x);
Octonion octonion_from_json(const nlohmann::json& j);

nlohmann::json to_json(const OVector& x);
OVector ovector_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ParaLinearOperator& t);
// matrix_tol scales the para-linearity acceptance when reading the full
// matrix form.
ParaLinearOperator operator_from_json(const nlohmann::json& j, double matrix_tol = 1e-10);

nlohmann::json to_json(const SpectralDecomposition& d, double residual);

nlohmann::json to_json(const SpectrumFunction& f);
SpectrumFunction function_from_json(const nlohmann::json& j);

nlohmann::json load_json_file(const std::string& path);  // throws ParseError
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace octopara
