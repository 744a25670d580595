#include "rolling/errors.hpp"

namespace rolling {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DegenerateChart: return "DegenerateChart";
    case ErrorKind::ChartBoundary: return "ChartBoundary";
    case ErrorKind::SingularLambda: return "SingularLambda";
    case ErrorKind::SingularShapeOperator: return "SingularShapeOperator";
    case ErrorKind::NotPlanarScene: return "NotPlanarScene";
    case ErrorKind::ProjectionDiverged: return "ProjectionDiverged";
    case ErrorKind::ConfigError: return "ConfigError";
  }
  return "Unknown";
}

}  // namespace rolling
