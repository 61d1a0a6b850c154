#pragma once

#include <optional>
#include <string>
#include <vector>

#include "document.hpp"

namespace simplex::cli {

/// Fixed 12-decimal rendering; negative zero prints as zero.
std::string fixed12(double x);

/// "p/q" when x equals a fraction with denominator at most max_denominator
/// to within 1e-12 (relative to max(1, |x|)).
std::optional<std::string> exact_fraction(double x, long long max_denominator = 10000);

/// Report items. Every item is a JSON object with "kind" and "name".
Json point_item(const std::string& name, const BarycentricPoint& p, double residual,
                const std::string& residual_label);
Json scalar_item(const std::string& name, double value);
Json values_item(const std::string& name, const Vector& values);
Json text_item(const std::string& name, const std::string& text);
Json table_item(const std::string& name, std::vector<std::string> columns, Json rows);

/// Skeleton report: command, document echo, options, empty results and warnings.
Json make_report(const std::string& command, const Document& doc, Json options);

/// Plain-text rendering with 12-decimal coordinates.
std::string render_human(const Json& report);

}  // namespace simplex::cli
