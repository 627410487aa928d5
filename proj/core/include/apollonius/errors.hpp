#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace apollo {

enum class ErrorKind {
  ZeroRadicand,
  NoEmbedding,
  FieldMismatch,
  NestedRadical,
  TowerTooDeep,
  DivisionByZero,
  ZeroArgument,
  ZeroScalar,
  DegenerateCircle,
  UnderDetermined,
  SquareRootUnavailable,
  PoleAtT,
  CollinearCenters,
  TangentPair,
  InfiniteRadius,
  ConcentricDegeneracy,
  DegenerateSolution,
  ZeroIndex,
  NotSplitRadii,
  SolutionsAtInfinity,
  NotZeroDimensional,
  DegenerateForm,
  DegenerateMerge,
  InvalidPrime,
};

std::string_view error_name(ErrorKind kind);

// Raised when a mathematical precondition of an operation fails.
class MathError : public std::runtime_error {
 public:
  MathError(ErrorKind kind, const std::string& detail)
      : std::runtime_error(std::string(error_name(kind)) + ": " + detail), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised for malformed textual input (configs, element strings).
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace apollo
