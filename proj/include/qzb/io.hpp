#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "qzb/bounds.hpp"
#include "qzb/qpoly.hpp"
#include "qzb/roots.hpp"

// JSON encodings shared by the CLI and the bench harness:
//   quaternion   [w, x, y, z]
//   polynomial   {"side": "left"|"right", "coeffs": [[w,x,y,z], ...]}  ascending degree
//   zero set     {"isolated": [[w,x,y,z], ...], "spheres": [[x, y], ...], "residual_max": num}
//   bound report {"name": str, "applicable": bool, "radius": num|null,
//                 "parameters": {...}, "hypothesis_detail": str}
// Malformed input throws qzb::Error with ErrorCode::InvalidInput.

namespace qzb {

nlohmann::json to_json(const Quaternion& q);
Quaternion quaternion_from_json(const nlohmann::json& j);

/// Accepts a JSON array "[w, x, y, z]" or four comma-separated numbers.
Quaternion parse_quaternion(const std::string& text);

nlohmann::json to_json(const QPolynomial& p);
QPolynomial polynomial_from_json(const nlohmann::json& j);
QPolynomial read_polynomial(const std::filesystem::path& path);

nlohmann::json to_json(const ZeroSet& zs);
nlohmann::json to_json(const BoundReport& r);

}  // namespace qzb
