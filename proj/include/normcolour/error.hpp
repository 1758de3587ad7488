#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace normcolour {

enum class ErrorKind {
  DuplicateNormId,
  UnknownNormId,
  SelfConflict,
  IncompleteColouring,
  UnknownColour,
  TooLarge,
  TooManyConflicts,
  EmptyInput,
  SyntaxError,
  SchemaError,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DuplicateNormId: return "DuplicateNormId";
    case ErrorKind::UnknownNormId: return "UnknownNormId";
    case ErrorKind::SelfConflict: return "SelfConflict";
    case ErrorKind::IncompleteColouring: return "IncompleteColouring";
    case ErrorKind::UnknownColour: return "UnknownColour";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::TooManyConflicts: return "TooManyConflicts";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SchemaError: return "SchemaError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace normcolour
