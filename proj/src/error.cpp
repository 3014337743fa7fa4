#include "neutro/error.hpp"

namespace neutro {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Syntax: return "SyntaxError";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::EmptySubset: return "EmptySubset";
    case ErrorCode::InvalidInterval: return "InvalidInterval";
    case ErrorCode::Component: return "ComponentError";
    case ErrorCode::UnknownElement: return "UnknownElement";
    case ErrorCode::InvalidLabel: return "InvalidLabel";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::Io: return "IoError";
  }
  return "Error";
}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> offset)
    : std::runtime_error(message), code_(code), cause_(code), offset_(offset) {}

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> offset, ErrorCode cause)
    : std::runtime_error(message), code_(code), cause_(cause), offset_(offset) {}

}  // namespace neutro
