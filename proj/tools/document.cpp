#include "document.hpp"

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>

namespace simplex::cli {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::int64_t parse_integer(std::string_view s, const std::string& path) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty())
    throw InputError(path + ": invalid integer '" + std::string(s) + "' in fraction");
  return v;
}

const Json& require(const Json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError(path + ": missing key '" + key + "'");
  return *it;
}

}  // namespace

double parse_number_text(std::string_view text, const std::string& path) {
  const std::string s = trim(text);
  if (s.empty()) throw InputError(path + ": empty number");
  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    const std::int64_t p = parse_integer(trim(std::string_view(s).substr(0, slash)), path);
    const std::int64_t q = parse_integer(trim(std::string_view(s).substr(slash + 1)), path);
    if (q == 0) throw InputError(path + ": zero denominator in '" + s + "'");
    return static_cast<double>(p) / static_cast<double>(q);
  }
  double v = 0.0;
  std::string_view body(s);
  if (body.front() == '+') body.remove_prefix(1);
  const auto* end = body.data() + body.size();
  const auto [ptr, ec] = std::from_chars(body.data(), end, v);
  if (ec != std::errc() || ptr != end) throw InputError(path + ": invalid number '" + s + "'");
  if (!std::isfinite(v)) throw InputError(path + ": number must be finite");
  return v;
}

double parse_number(const Json& value, const std::string& path) {
  if (value.is_number()) {
    const double v = value.get<double>();
    if (!std::isfinite(v)) throw InputError(path + ": number must be finite");
    return v;
  }
  if (value.is_string()) return parse_number_text(value.get<std::string>(), path);
  throw InputError(path + ": expected a number or a fraction string");
}

Document parse_document(std::string_view text) {
  Json root;
  try {
    root = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError("byte " + std::to_string(e.byte) + ": " + e.what());
  }
  if (!root.is_object()) throw InputError("/: document must be an object");

  for (const auto& [key, value] : root.items()) {
    if (key != "name" && key != "vertices" && key != "edge_lengths" && key != "tolerance" &&
        key != "max_iterations")
      throw InputError("/" + key + ": unknown key");
  }
  const bool has_vertices = root.contains("vertices");
  const bool has_edges = root.contains("edge_lengths");
  if (has_vertices == has_edges)
    throw InputError("/: exactly one of 'vertices' and 'edge_lengths' is required");

  Json echo = Json::object();
  std::optional<std::string> name;
  if (root.contains("name")) {
    if (!root["name"].is_string()) throw InputError("/name: expected a string");
    name = root["name"].get<std::string>();
    echo["name"] = *name;
  }

  std::optional<SimplexModel> model;
  std::optional<EdgeLengthTable> table;
  if (has_vertices) {
    const Json& verts = root["vertices"];
    if (!verts.is_array() || verts.size() < 2)
      throw InputError("/vertices: expected an array of at least 2 points");
    const std::size_t n = verts.size() - 1;
    std::vector<Vector> points;
    Json echo_verts = Json::array();
    for (std::size_t i = 0; i < verts.size(); ++i) {
      const std::string path = "/vertices/" + std::to_string(i);
      const Json& row = verts[i];
      if (!row.is_array() || row.size() != n)
        throw InputError(path + ": expected " + std::to_string(n) + " coordinates");
      Vector v(static_cast<Eigen::Index>(n));
      Json echo_row = Json::array();
      for (std::size_t k = 0; k < n; ++k) {
        v(static_cast<Eigen::Index>(k)) = parse_number(row[k], path + "/" + std::to_string(k));
        echo_row.push_back(row[k]);  // fraction strings stay verbatim
      }
      points.push_back(std::move(v));
      echo_verts.push_back(std::move(echo_row));
    }
    echo["vertices"] = std::move(echo_verts);
    model = SimplexModel::from_vertices(std::move(points));
  } else {
    const Json& edges = root["edge_lengths"];
    if (!edges.is_object()) throw InputError("/edge_lengths: expected an object");
    for (const auto& [key, value] : edges.items())
      if (key != "dimension" && key != "values")
        throw InputError("/edge_lengths/" + key + ": unknown key");
    const Json& dim = require(edges, "dimension", "/edge_lengths");
    if (!dim.is_number_integer() || dim.get<int>() < 1)
      throw InputError("/edge_lengths/dimension: expected a positive integer");
    const int n = dim.get<int>();
    const Json& values = require(edges, "values", "/edge_lengths");
    const std::size_t expected = static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2;
    if (!values.is_array() || values.size() != expected)
      throw InputError("/edge_lengths/values: expected " + std::to_string(expected) + " values");
    std::vector<double> d;
    Json echo_values = Json::array();
    for (std::size_t k = 0; k < values.size(); ++k) {
      d.push_back(parse_number(values[k], "/edge_lengths/values/" + std::to_string(k)));
      echo_values.push_back(values[k]);
    }
    try {
      table = EdgeLengthTable::from_pairs(n, d);
    } catch (const GeometryError& e) {
      if (e.code() == ErrorCode::InvalidArgument) throw InputError(std::string("/edge_lengths/values: ") + e.what());
      throw;
    }
    echo["edge_lengths"] = Json{{"dimension", n}, {"values", std::move(echo_values)}};
    model = embed_from_edge_lengths(*table);
  }

  Document doc{name, std::move(*model), std::move(table), std::nullopt, std::nullopt, {}};
  if (root.contains("tolerance")) {
    doc.tolerance = parse_number(root["tolerance"], "/tolerance");
    if (!(*doc.tolerance > 0.0)) throw InputError("/tolerance: must be positive");
    echo["tolerance"] = root["tolerance"];
  }
  if (root.contains("max_iterations")) {
    const Json& m = root["max_iterations"];
    if (!m.is_number_integer() || m.get<long long>() < 1 ||
        m.get<long long>() > std::numeric_limits<int>::max())
      throw InputError("/max_iterations: expected a positive integer");
    doc.max_iterations = m.get<int>();
    echo["max_iterations"] = m;
  }
  doc.echo = std::move(echo);
  return doc;
}

Vector parse_coordinates(std::string_view text, const std::string& what) {
  const std::string s = trim(text);
  std::vector<double> values;
  if (!s.empty() && s.front() == '[') {
    Json arr;
    try {
      arr = Json::parse(s);
    } catch (const Json::parse_error& e) {
      throw InputError(what + ": " + e.what());
    }
    if (!arr.is_array()) throw InputError(what + ": expected a list of coordinates");
    for (std::size_t k = 0; k < arr.size(); ++k)
      values.push_back(parse_number(arr[k], what + "[" + std::to_string(k) + "]"));
  } else {
    std::size_t start = 0;
    while (start <= s.size()) {
      const auto comma = s.find(',', start);
      const auto stop = comma == std::string::npos ? s.size() : comma;
      values.push_back(parse_number_text(std::string_view(s).substr(start, stop - start),
                                         what + "[" + std::to_string(values.size()) + "]"));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  if (values.empty()) throw InputError(what + ": no coordinates given");
  return Eigen::Map<const Vector>(values.data(), static_cast<Eigen::Index>(values.size()));
}

std::vector<Vector> parse_coordinate_lists(std::string_view text, const std::string& what) {
  Json arr;
  try {
    arr = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(what + ": " + e.what());
  }
  if (!arr.is_array()) throw InputError(what + ": expected a list of coordinate lists");
  std::vector<Vector> out;
  for (std::size_t k = 0; k < arr.size(); ++k)
    out.push_back(parse_coordinates(arr[k].dump(), what + "[" + std::to_string(k) + "]"));
  return out;
}

}  // namespace simplex::cli
