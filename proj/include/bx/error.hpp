#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bx {

enum class ErrorKind {
  CapExceeded,
  InvalidPath,
  ParseError,
  StateNotRepresented,
  NotExpressible,
  ReprMismatch,
  SeamMismatch,
  InvalidEdit,
  UnknownName,
  NoPreorder,
};

const char* to_string(ErrorKind kind);

// Single exception type for every contract violation in the library.
// `detail` carries the numeric payload of the error where one exists
// (cardinality for CapExceeded, failing step for InvalidPath, input offset
// for ParseError).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message, std::size_t detail = 0)
      : std::runtime_error(std::move(message)), kind_(kind), detail_(detail) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::size_t detail() const noexcept { return detail_; }

 private:
  ErrorKind kind_;
  std::size_t detail_;
};

}  // namespace bx
