#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rolling {

enum class ErrorKind {
  DegenerateChart,
  ChartBoundary,
  SingularLambda,
  SingularShapeOperator,
  NotPlanarScene,
  ProjectionDiverged,
  ConfigError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the ErrorKind tags so
/// callers (the CLI in particular) can map it to an exit status.
class RollingError : public std::runtime_error {
 public:
  RollingError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace rolling
