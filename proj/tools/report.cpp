#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace simplex::cli {

namespace {

std::string scientific(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

Json json_vector(const Vector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

std::string bracket(const Json& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].is_string() ? values[i].get<std::string>() : fixed12(values[i].get<double>());
  }
  return out + "]";
}

std::string number_text(const Json& v) {
  if (v.is_number_float()) return fixed12(v.get<double>());
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

void render_table(std::ostringstream& out, const Json& item) {
  const Json& columns = item["columns"];
  std::vector<std::size_t> width;
  for (const auto& c : columns) width.push_back(c.get<std::string>().size());
  std::vector<std::vector<std::string>> cells;
  for (const auto& row : item["rows"]) {
    std::vector<std::string> line;
    for (std::size_t k = 0; k < row.size(); ++k) {
      line.push_back(number_text(row[k]));
      width[k] = std::max(width[k], line.back().size());
    }
    cells.push_back(std::move(line));
  }
  auto emit = [&](const std::vector<std::string>& line) {
    out << "  ";
    for (std::size_t k = 0; k < line.size(); ++k) {
      out << line[k];
      if (k + 1 < line.size()) out << std::string(width[k] - line[k].size() + 2, ' ');
    }
    out << '\n';
  };
  std::vector<std::string> header;
  for (const auto& c : columns) header.push_back(c.get<std::string>());
  emit(header);
  for (const auto& line : cells) emit(line);
}

}  // namespace

std::string fixed12(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  std::string s(buf);
  if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) s.erase(0, 1);
  return s;
}

std::optional<std::string> exact_fraction(double x, long long max_denominator) {
  if (!std::isfinite(x)) return std::nullopt;
  // continued fraction convergents of |x|
  const double ax = std::abs(x);
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double rest = ax;
  for (int k = 0; k < 64; ++k) {
    const double a = std::floor(rest);
    if (a > 1e15) break;
    const long long ai = static_cast<long long>(a);
    const long long p2 = ai * p1 + p0;
    const long long q2 = ai * q1 + q0;
    if (q2 > max_denominator) break;
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
    if (std::abs(ax - static_cast<double>(p1) / static_cast<double>(q1)) <= 1e-12 * std::max(1.0, ax)) {
      std::string s = (x < 0 && p1 != 0 ? "-" : "") + std::to_string(p1);
      if (q1 != 1) s += "/" + std::to_string(q1);
      return s;
    }
    const double frac = rest - a;
    if (frac <= 0.0) break;
    rest = 1.0 / frac;
  }
  return std::nullopt;
}

Json point_item(const std::string& name, const BarycentricPoint& p, double residual,
                const std::string& residual_label) {
  Json item{{"kind", "point"}, {"name", name}};
  if (p.is_finite()) {
    const Vector c = p.normalized_coords();
    item["normalized"] = json_vector(c);
    item["homogeneous"] = json_vector(p.display_coords());
    Json exact = Json::array();
    for (Eigen::Index i = 0; i < c.size(); ++i) {
      const auto f = exact_fraction(c(i));
      if (!f) {
        exact = nullptr;
        break;
      }
      exact.push_back(*f);
    }
    if (!exact.is_null()) item["exact"] = std::move(exact);
  } else {
    item["normalized"] = nullptr;
    item["homogeneous"] = json_vector(p.display_coords());
  }
  item["residual"] = residual;
  item["residual_label"] = residual_label;
  return item;
}

Json scalar_item(const std::string& name, double value) {
  Json item{{"kind", "scalar"}, {"name", name}, {"value", value}};
  if (const auto f = exact_fraction(value); f && f->find('/') != std::string::npos) item["exact"] = *f;
  return item;
}

Json values_item(const std::string& name, const Vector& values) {
  return Json{{"kind", "values"}, {"name", name}, {"values", json_vector(values)}};
}

Json text_item(const std::string& name, const std::string& text) {
  return Json{{"kind", "text"}, {"name", name}, {"text", text}};
}

Json table_item(const std::string& name, std::vector<std::string> columns, Json rows) {
  return Json{{"kind", "table"}, {"name", name}, {"columns", std::move(columns)}, {"rows", std::move(rows)}};
}

Json make_report(const std::string& command, const Document& doc, Json options) {
  return Json{{"command", command},
              {"document", doc.echo},
              {"options", std::move(options)},
              {"results", Json::array()},
              {"warnings", Json::array()}};
}

std::string render_human(const Json& report) {
  std::ostringstream out;
  out << "command: " << report["command"].get<std::string>() << '\n';
  if (report.contains("document")) {
    const Json& doc = report["document"];
    out << "simplex: " << (doc.contains("name") ? doc["name"].get<std::string>() : std::string("(unnamed)"));
    if (doc.contains("vertices"))
      out << ", dimension " << doc["vertices"].size() - 1 << ", given by vertices\n";
    else if (doc.contains("edge_lengths"))
      out << ", dimension " << doc["edge_lengths"]["dimension"].get<int>() << ", given by edge lengths\n";
    else
      out << '\n';
  }
  for (const auto& [key, value] : report["options"].items())
    out << "option " << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';

  for (const auto& item : report["results"]) {
    const std::string kind = item["kind"].get<std::string>();
    const std::string name = item["name"].get<std::string>();
    out << '\n';
    if (kind == "point") {
      out << name << '\n';
      if (!item["normalized"].is_null()) out << "  normalized   " << bracket(item["normalized"]) << '\n';
      else out << "  normalized   (point at infinity)\n";
      out << "  homogeneous  " << bracket(item["homogeneous"]) << '\n';
      if (item.contains("exact")) out << "  exact        " << bracket(item["exact"]) << '\n';
      out << "  residual     "
          << (item["residual"].is_number() ? scientific(item["residual"].get<double>()) : "n/a") << "  ("
          << item["residual_label"].get<std::string>() << ")\n";
      if (item.contains("iterations")) out << "  iterations   " << item["iterations"].get<int>() << '\n';
      if (item.contains("note")) out << "  note         " << item["note"].get<std::string>() << '\n';
    } else if (kind == "scalar") {
      out << name << ": " << number_text(item["value"]);
      if (item.contains("exact")) out << "  (" << item["exact"].get<std::string>() << ")";
      out << '\n';
    } else if (kind == "values") {
      out << name << ": " << bracket(item["values"]) << '\n';
    } else if (kind == "text") {
      out << name << ": " << item["text"].get<std::string>() << '\n';
    } else if (kind == "table") {
      out << name << ":\n";
      render_table(out, item);
    }
  }
  if (report.contains("trace")) {
    const Json& t = report["trace"];
    out << "\ntrace (method " << t["method"].get<std::string>() << ", " << t["iterations"].get<int>()
        << " iterations, " << (t["converged"].get<bool>() ? "converged" : "not converged") << "):\n";
    for (std::size_t k = 0; k < t["iterates"].size(); ++k)
      out << "  " << k << "  " << fixed12(t["objective"][k].get<double>()) << "  " << bracket(t["iterates"][k])
          << '\n';
  }
  if (!report["warnings"].empty()) {
    out << '\n';
    for (const auto& w : report["warnings"]) out << "warning: " << w.get<std::string>() << '\n';
  }
  return out.str();
}

}  // namespace simplex::cli
