#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pbtd {

enum class ErrorKind {
  Shape,
  Range,
  DomainMismatch,
  InvalidPermutation,
  SharedColumnMismatch,
  AlmostDisjointViolation,
  InvalidCenter,
  InvalidTemplate,
  MissingGenerator,
  Precondition,
  Parse,
};

inline std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Shape: return "ShapeError";
    case ErrorKind::Range: return "RangeError";
    case ErrorKind::DomainMismatch: return "DomainMismatch";
    case ErrorKind::InvalidPermutation: return "InvalidPermutation";
    case ErrorKind::SharedColumnMismatch: return "SharedColumnMismatch";
    case ErrorKind::AlmostDisjointViolation: return "AlmostDisjointViolation";
    case ErrorKind::InvalidCenter: return "InvalidCenter";
    case ErrorKind::InvalidTemplate: return "InvalidTemplate";
    case ErrorKind::MissingGenerator: return "MissingGenerator";
    case ErrorKind::Precondition: return "PreconditionViolation";
    case ErrorKind::Parse: return "ParseError";
  }
  return "Error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Positional error raised by the text-format parser. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, int line, int column, const std::string& what)
      : Error(kind, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

}  // namespace pbtd
