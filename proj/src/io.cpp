#include "qzb/io.hpp"

#include <fstream>
#include <sstream>

#include "qzb/error.hpp"

namespace qzb {

using nlohmann::json;

json to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

Quaternion quaternion_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw Error(ErrorCode::InvalidInput, "quaternion must be an array of 4 numbers");
  double c[4];
  for (std::size_t i = 0; i < 4; ++i) {
    if (!j[i].is_number()) throw Error(ErrorCode::InvalidInput, "quaternion components must be numbers");
    c[i] = j[i].get<double>();
    if (!std::isfinite(c[i])) throw Error(ErrorCode::InvalidInput, "quaternion components must be finite");
  }
  return {c[0], c[1], c[2], c[3]};
}

Quaternion parse_quaternion(const std::string& text) {
  std::string body = text;
  if (body.find('[') == std::string::npos) body = "[" + body + "]";
  json j = json::parse(body, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::InvalidInput, "cannot parse quaternion '" + text + "'");
  return quaternion_from_json(j);
}

json to_json(const QPolynomial& p) {
  json coeffs = json::array();
  for (const auto& q : p.coeffs()) coeffs.push_back(to_json(q));
  return {{"side", p.side() == Side::Left ? "left" : "right"}, {"coeffs", coeffs}};
}

QPolynomial polynomial_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidInput, "polynomial must be a JSON object");
  if (!j.contains("side") || !j["side"].is_string()) throw Error(ErrorCode::InvalidInput, "missing string field 'side'");
  const auto side_text = j["side"].get<std::string>();
  Side side;
  if (side_text == "left")
    side = Side::Left;
  else if (side_text == "right")
    side = Side::Right;
  else
    throw Error(ErrorCode::InvalidInput, "side must be \"left\" or \"right\"");
  if (!j.contains("coeffs") || !j["coeffs"].is_array() || j["coeffs"].empty())
    throw Error(ErrorCode::InvalidInput, "missing non-empty array 'coeffs'");
  std::vector<Quaternion> coeffs;
  for (const auto& c : j["coeffs"]) coeffs.push_back(quaternion_from_json(c));
  return {std::move(coeffs), side};
}

QPolynomial read_polynomial(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::InvalidInput, path.string() + " is not valid JSON");
  return polynomial_from_json(j);
}

json to_json(const ZeroSet& zs) {
  json isolated = json::array();
  for (const auto& q : zs.isolated) isolated.push_back(to_json(q));
  json spheres = json::array();
  for (const auto& [x, y] : zs.spheres) spheres.push_back(json::array({x, y}));
  return {{"isolated", isolated}, {"spheres", spheres}, {"residual_max", zs.residual_max}};
}

json to_json(const BoundReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = v;
  return {{"name", r.name},
          {"applicable", r.applicable},
          {"radius", r.radius ? json(*r.radius) : json(nullptr)},
          {"parameters", params},
          {"hypothesis_detail", r.hypothesis_detail}};
}

}  // namespace qzb
