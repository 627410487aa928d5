#include "apollonius/errors.hpp"

namespace apollo {

std::string_view error_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroRadicand: return "ZeroRadicand";
    case ErrorKind::NoEmbedding: return "NoEmbedding";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::NestedRadical: return "NestedRadical";
    case ErrorKind::TowerTooDeep: return "TowerTooDeep";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::ZeroArgument: return "ZeroArgument";
    case ErrorKind::ZeroScalar: return "ZeroScalar";
    case ErrorKind::DegenerateCircle: return "DegenerateCircle";
    case ErrorKind::UnderDetermined: return "UnderDetermined";
    case ErrorKind::SquareRootUnavailable: return "SquareRootUnavailable";
    case ErrorKind::PoleAtT: return "PoleAtT";
    case ErrorKind::CollinearCenters: return "CollinearCenters";
    case ErrorKind::TangentPair: return "TangentPair";
    case ErrorKind::InfiniteRadius: return "InfiniteRadius";
    case ErrorKind::ConcentricDegeneracy: return "ConcentricDegeneracy";
    case ErrorKind::DegenerateSolution: return "DegenerateSolution";
    case ErrorKind::ZeroIndex: return "ZeroIndex";
    case ErrorKind::NotSplitRadii: return "NotSplitRadii";
    case ErrorKind::SolutionsAtInfinity: return "SolutionsAtInfinity";
    case ErrorKind::NotZeroDimensional: return "NotZeroDimensional";
    case ErrorKind::DegenerateForm: return "DegenerateForm";
    case ErrorKind::DegenerateMerge: return "DegenerateMerge";
    case ErrorKind::InvalidPrime: return "InvalidPrime";
  }
  return "Unknown";
}

}  // namespace apollo
