#include "pptlab/errors.hpp"

namespace pptlab {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::FDivisibleByP: return "FDivisibleByP";
    case ErrorKind::FIsUnit: return "FIsUnit";
    case ErrorKind::InvalidIndex: return "InvalidIndex";
    case ErrorKind::SequenceHitP: return "SequenceHitP";
    case ErrorKind::PNotGreaterThanN: return "PNotGreaterThanN";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::MonotonicityViolation: return "MonotonicityViolation";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

ErrorClass classify_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ResourceLimit:
      return ErrorClass::ResourceLimit;
    case ErrorKind::NotDivisible:
    case ErrorKind::MonotonicityViolation:
    case ErrorKind::Internal:
      return ErrorClass::Internal;
    default:
      return ErrorClass::InvalidInput;
  }
}

}  // namespace pptlab
