#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace neutro {

enum class ErrorCode {
  Syntax,
  OutOfRange,
  EmptyInput,
  EmptySubset,
  InvalidInterval,
  Component,
  UnknownElement,
  InvalidLabel,
  DuplicateId,
  Io,
};

const char* to_string(ErrorCode code);

// Every failure in the library is reported through this type. `offset` is a
// character position into the text being parsed, when one applies.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> offset = std::nullopt);
  /// Wrapping error; `cause` is the code of the failure it wraps.
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> offset, ErrorCode cause);

  ErrorCode code() const noexcept { return code_; }
  /// For ComponentError, the underlying failure; otherwise code().
  ErrorCode cause() const noexcept { return cause_; }
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorCode code_;
  ErrorCode cause_;
  std::optional<std::size_t> offset_;
};

}  // namespace neutro
