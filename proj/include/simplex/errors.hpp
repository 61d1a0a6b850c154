#pragma once

#include <stdexcept>
#include <string>

namespace simplex {

enum class ErrorCode {
  InvalidArgument,
  NotEmbeddable,
  Degenerate,
  PointAtInfinity,
  OnSideplane,
  AtInfinity,
  UnboundedAntipedal,
  CenterAtVertex,
  ZeroCoordinate,
  AxisUndefined,
  NotATriangle,
  ParallelLine,
  AtVertex,
};

const char* to_string(ErrorCode code);

// Thrown for every geometric precondition failure. The code identifies the
// failure class so callers (the CLI in particular) can map it to an exit
// status without string matching.
class GeometryError : public std::runtime_error {
 public:
  GeometryError(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace simplex
