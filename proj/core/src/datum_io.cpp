#include "superloop/datum_io.hpp"

#include <fstream>
#include <json.hpp>

#include "superloop/error.hpp"

namespace superloop {

namespace {

using json = nlohmann::ordered_json;

Rational scalar_from(const json& j) {
  if (!j.is_string())
    throw error(errc::parse_error, "rational entries must be strings");
  return parse_rational(j.get<std::string>());
}

RatVec vec_from(const json& j) {
  if (!j.is_array()) throw error(errc::parse_error, "expected array");
  RatVec v;
  for (const auto& e : j) v.push_back(scalar_from(e));
  return v;
}

RatMat mat_from(const json& j) {
  if (!j.is_array()) throw error(errc::parse_error, "expected 2-D array");
  RatMat m;
  for (const auto& row : j) m.push_back(vec_from(row));
  return m;
}

RatTensor3 tensor_from(const json& j) {
  if (!j.is_array()) throw error(errc::parse_error, "expected 3-D array");
  RatTensor3 t;
  for (const auto& m : j) t.push_back(mat_from(m));
  return t;
}

json vec_to(const RatVec& v) {
  json j = json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

json mat_to(const RatMat& m) {
  json j = json::array();
  for (const auto& r : m) j.push_back(vec_to(r));
  return j;
}

json tensor_to(const RatTensor3& t) {
  json j = json::array();
  for (const auto& m : t) j.push_back(mat_to(m));
  return j;
}

}  // namespace

AlgebraDatum datum_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw error(errc::parse_error, e.what());
  }
  AlgebraDatum d;
  try {
    d.dim_a = j.at("dim_a").get<int>();
    d.dim_u = j.at("dim_u").get<int>();
    d.mul_a = tensor_from(j.at("mul_a"));
    d.form_a = mat_from(j.at("form_a"));
    d.act = tensor_from(j.at("act"));
    d.circ = tensor_from(j.at("circ"));
    d.form_u = mat_from(j.at("form_u"));
    if (j.contains("identity_a")) d.identity_a = vec_from(j.at("identity_a"));
  } catch (const json::exception& e) {
    throw error(errc::parse_error, e.what());
  }
  d.check_shapes();
  return d;
}

AlgebraDatum load_datum(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::parse_error, "cannot open '" + path + "'");
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return datum_from_json_text(text);
}

std::string datum_to_json_text(const AlgebraDatum& d) {
  json j;
  j["dim_a"] = d.dim_a;
  j["dim_u"] = d.dim_u;
  j["mul_a"] = tensor_to(d.mul_a);
  j["form_a"] = mat_to(d.form_a);
  j["act"] = tensor_to(d.act);
  j["circ"] = tensor_to(d.circ);
  j["form_u"] = mat_to(d.form_u);
  if (d.identity_a) j["identity_a"] = vec_to(*d.identity_a);
  return j.dump(2) + "\n";
}

void save_datum(const AlgebraDatum& d, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw error(errc::parse_error, "cannot write '" + path + "'");
  out << datum_to_json_text(d);
}

}  // namespace superloop
