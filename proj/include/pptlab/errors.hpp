#ifndef PPTLAB_ERRORS_HPP
#define PPTLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pptlab {

// Every failure the library reports carries one of these kinds.  The kind
// decides the CLI exit code and the C API status.
enum class ErrorKind {
  // invalid input (exit code 2)
  InvalidArgument,
  ContextMismatch,
  FDivisibleByP,
  FIsUnit,
  InvalidIndex,
  SequenceHitP,
  PNotGreaterThanN,
  SyntaxError,
  UnknownVariable,
  // resource caps (exit code 3)
  ResourceLimit,
  // internal assertions (exit code 4)
  NotDivisible,
  MonotonicityViolation,
  Internal,
};

const char* to_string(ErrorKind kind);

enum class ErrorClass { InvalidInput, ResourceLimit, Internal };

ErrorClass classify_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  ErrorClass error_class() const { return classify_error(kind_); }

 private:
  ErrorKind kind_;
};

// Parse failures also know where they happened (0-based byte offset).
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(ErrorKind::SyntaxError,
              what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace pptlab

#endif
