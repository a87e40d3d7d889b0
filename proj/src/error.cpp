#include "nielson/error.hpp"

namespace nielson {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRangeBeta: return "OutOfRangeBeta";
    case ErrorCode::DomainError: return "DomainError";
    case ErrorCode::QuadratureNonConvergence: return "QuadratureNonConvergence";
    case ErrorCode::ZeroWeights: return "ZeroWeights";
    case ErrorCode::UnsupportedFamily: return "UnsupportedFamily";
    case ErrorCode::NonTriangleFace: return "NonTriangleFace";
    case ErrorCode::NonManifoldEdge: return "NonManifoldEdge";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptyMesh: return "EmptyMesh";
    case ErrorCode::DegenerateFace: return "DegenerateFace";
    case ErrorCode::ZeroNormal: return "ZeroNormal";
    case ErrorCode::ParallelEdgeNormal: return "ParallelEdgeNormal";
    case ErrorCode::NonPositiveDeterminant: return "NonPositiveDeterminant";
    case ErrorCode::MissingEdgeSolution: return "MissingEdgeSolution";
    case ErrorCode::ZeroDenominator: return "ZeroDenominator";
    case ErrorCode::DegenerateNormal: return "DegenerateNormal";
    case ErrorCode::OpposingNormals: return "OpposingNormals";
    case ErrorCode::DegenerateChord: return "DegenerateChord";
    case ErrorCode::CornerSingularity: return "CornerSingularity";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

ErrorCategory category_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::OutOfRangeBeta:
    case ErrorCode::ZeroWeights:
    case ErrorCode::UnsupportedFamily:
    case ErrorCode::ConfigError:
    case ErrorCode::IoError:
      return ErrorCategory::Config;
    case ErrorCode::NonTriangleFace:
    case ErrorCode::NonManifoldEdge:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::EmptyMesh:
    case ErrorCode::DegenerateFace:
      return ErrorCategory::Mesh;
    default:
      return ErrorCategory::Numeric;
  }
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), message_(what) {}

}  // namespace nielson
