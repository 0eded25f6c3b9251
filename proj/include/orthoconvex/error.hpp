#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oc {

enum class ErrorCode {
  InvalidGeometry,
  NonAlignedCell,
  EmptyInput,
  NotMonotone,
  NotPathConnected,
  NotOrthoConvex,
  PointInside,
  PointOutside,
  NotDisjoint,
  NotAxisAligned,
  ConstructionFailed,
  PreconditionViolated,
  InsufficientItems,
  ParseError,
  UnknownObject,
};

std::string_view error_name(ErrorCode code);

/// Precondition and construction failures. The code names the failure the
/// way the CLI reports it in its error JSON.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_name(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }
  std::string_view name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

}  // namespace oc
