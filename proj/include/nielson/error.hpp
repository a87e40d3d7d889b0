#pragma once

#include <stdexcept>
#include <string>

namespace nielson {

enum class ErrorCode {
  OutOfRangeBeta,
  DomainError,
  QuadratureNonConvergence,
  ZeroWeights,
  UnsupportedFamily,
  NonTriangleFace,
  NonManifoldEdge,
  IndexOutOfRange,
  EmptyMesh,
  DegenerateFace,
  ZeroNormal,
  ParallelEdgeNormal,
  NonPositiveDeterminant,
  MissingEdgeSolution,
  ZeroDenominator,
  DegenerateNormal,
  OpposingNormals,
  DegenerateChord,
  CornerSingularity,
  ConfigError,
  IoError,
};

const char* to_string(ErrorCode code);

/// Broad grouping used by the command-line front end to pick an exit status.
enum class ErrorCategory { Config, Mesh, Numeric };

ErrorCategory category_of(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }
  /// The message without the code prefix that what() carries.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace nielson
