#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "document.hpp"

namespace simplex::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitGeometry = 3;
inline constexpr int kExitNoConvergence = 4;

struct Options {
  std::optional<double> tolerance;
  std::optional<int> max_iterations;
  std::string method = "q";
  std::optional<std::string> start;
  bool trace = false;
  std::optional<std::string> point;
  /// Inline JSON list of coordinate lists, or a path to a file holding one.
  std::optional<std::string> seeds;
  std::optional<int> budget;
};

struct CommandResult {
  int exit_code = kExitOk;
  Json report;
  /// One-line message for stderr when the command did not fully succeed.
  std::string diagnostic;
};

/// G, I, K, O, circumradius and facet volumes.
CommandResult cmd_centers(const Document& doc, const Options& opts);
/// Isodynamic points for --point (default: the incenter).
CommandResult cmd_isodynamic(const Document& doc, const Options& opts);
/// Fermat-Torricelli point by Weiszfeld iteration. Exit 4 when it does not converge.
CommandResult cmd_fermat(const Document& doc, const Options& opts);
/// Isogonic catalog from the pedal iteration. Exit 4 when no seed yields an entry.
CommandResult cmd_isogonic(const Document& doc, const Options& opts);
/// Recomputes the published numbers and the property checks. Exit 1 on any
/// failing row. opts.tolerance, when set, replaces every numeric tolerance.
CommandResult cmd_verify_paper(const Options& opts);

/// Human rendering of a verify-paper report.
std::string render_verify(const Json& report);

/// Full command line entry point. Output is buffered so that failed input
/// produces nothing on stdout.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace simplex::cli
