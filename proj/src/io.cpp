#include "fvinv/io.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace fvinv::io {

namespace {

json rational_list(std::span<const Coefficient> cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(to_string(c));
  return out;
}

std::vector<Coefficient> parse_rational_list(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rational strings");
  std::vector<Coefficient> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw std::invalid_argument("rationals must be encoded as strings");
    out.push_back(parse_coefficient(e.get<std::string>()));
  }
  return out;
}

const json& member(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t count_field(const json& j, const char* key) {
  const json& v = member(j, key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw std::invalid_argument(std::string("field '") + key + "' must be a nonnegative integer");
  return v.get<std::size_t>();
}

} // namespace

json to_json(const Series& s) {
  return {{"coeffs", rational_list(s.coeffs())}, {"precision", s.precision()}};
}

json to_json(const RiordanPair& t) {
  return {{"beta", to_json(t.beta())}, {"alpha", to_json(t.alpha())},
          {"truncation", t.truncation()}};
}

json to_json(const ExactMatrix& m) {
  json out = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(rational_list(m.row(i)));
  return out;
}

json to_json(const Complex& c) {
  json maximal = json::array();
  for (const Face& f : c.maximal_faces()) maximal.push_back(f.vertices());
  return {{"maximal", maximal}};
}

json to_json(const FVector& f) {
  json out = json::array();
  for (const Integer& v : f) {
    if (v > std::numeric_limits<std::int64_t>::max())
      throw std::overflow_error("f-vector entry " + v.str() + " does not fit a JSON integer");
    out.push_back(v.convert_to<std::int64_t>());
  }
  return out;
}

Series series_from_json(const json& j) {
  std::vector<Coefficient> cs = parse_rational_list(member(j, "coeffs"));
  if (cs.empty()) throw std::invalid_argument("series needs at least one coefficient");
  if (count_field(j, "precision") != cs.size())
    throw std::invalid_argument("series precision does not match its coefficient count");
  return Series(std::move(cs));
}

RiordanPair riordan_from_json(const json& j) {
  RiordanPair t(series_from_json(member(j, "beta")), series_from_json(member(j, "alpha")));
  if (count_field(j, "truncation") != t.truncation())
    throw std::invalid_argument("truncation does not match the series precisions");
  return t;
}

ExactMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("matrix must be an array of rows");
  std::vector<std::vector<Coefficient>> rows;
  for (const auto& r : j) rows.push_back(parse_rational_list(r));
  return ExactMatrix(rows);
}

Complex complex_from_json(const json& j) {
  const json& maximal = member(j, "maximal");
  if (!maximal.is_array()) throw std::invalid_argument("'maximal' must be an array of faces");
  std::vector<Face> faces;
  for (const auto& f : maximal) {
    if (!f.is_array()) throw std::invalid_argument("each face must be an array of vertices");
    std::vector<Vertex> vs;
    for (const auto& v : f) {
      if (!v.is_number_integer()) throw std::invalid_argument("vertices must be integers");
      const auto value = v.get<std::int64_t>();
      if (value < std::numeric_limits<Vertex>::min() || value > std::numeric_limits<Vertex>::max())
        throw std::invalid_argument("vertex id out of range");
      vs.push_back(static_cast<Vertex>(value));
    }
    faces.emplace_back(std::move(vs));
  }
  return Complex::from_maximal(faces);
}

} // namespace fvinv::io
