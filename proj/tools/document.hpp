#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "simplex/core.hpp"

namespace simplex::cli {

using Json = nlohmann::ordered_json;

/// Malformed input. The message carries the position (a JSON pointer or a
/// byte offset) of the offending value.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A parsed simplex document:
///
///   {"name": "...",
///    "vertices": [[x, y, z], ...]                      (exactly one of these)
///    "edge_lengths": {"dimension": n, "values": [d12, d13, ..., d_n,n+1]},
///    "tolerance": 1e-12, "max_iterations": 10000}
///
/// Numbers may be JSON numbers or strings holding a decimal or a fraction
/// "p/q".
struct Document {
  std::optional<std::string> name;
  SimplexModel model;
  std::optional<EdgeLengthTable> edge_lengths;
  std::optional<double> tolerance;
  std::optional<int> max_iterations;
  /// The document as read, key order normalized. Re-parsing it gives the same model.
  Json echo;
};

/// Throws InputError for malformed documents and GeometryError when the data
/// does not describe a nondegenerate simplex.
Document parse_document(std::string_view text);

/// A number given as JSON number, decimal string or fraction string.
double parse_number(const Json& value, const std::string& path);
double parse_number_text(std::string_view text, const std::string& path);

/// A coordinate list, either JSON ("[1, \"2/3\", 3]") or comma separated
/// ("1,2/3,3").
Vector parse_coordinates(std::string_view text, const std::string& what);

/// A JSON list of coordinate lists.
std::vector<Vector> parse_coordinate_lists(std::string_view text, const std::string& what);

}  // namespace simplex::cli
