#pragma once

#include <stdexcept>
#include <string>

namespace krev {

/// Base class for everything the library throws besides std::invalid_argument.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

enum class ParseErrorKind {
  MissingHeader,
  MalformedLine,
  IndexOutOfRange,
  DuplicateEdge,
  SelfLoop,
  WrongLength,
  IllegalCharacter,
};

inline const char *to_string(ParseErrorKind kind) {
  switch (kind) {
  case ParseErrorKind::MissingHeader: return "missing header";
  case ParseErrorKind::MalformedLine: return "malformed line";
  case ParseErrorKind::IndexOutOfRange: return "index out of range";
  case ParseErrorKind::DuplicateEdge: return "duplicate edge";
  case ParseErrorKind::SelfLoop: return "self-loop";
  case ParseErrorKind::WrongLength: return "wrong length";
  case ParseErrorKind::IllegalCharacter: return "illegal character";
  }
  return "unknown";
}

class ParseError : public Error {
public:
  ParseError(ParseErrorKind kind, int line, const std::string &detail)
      : Error(format(kind, line, detail)), kind_(kind), line_(line) {}

  ParseErrorKind kind() const noexcept { return kind_; }
  /// 1-based line number, or 0 when the input is not line oriented.
  int line() const noexcept { return line_; }

private:
  static std::string format(ParseErrorKind kind, int line, const std::string &detail) {
    std::string msg = to_string(kind);
    if (line > 0)
      msg += " at line " + std::to_string(line);
    if (!detail.empty())
      msg += ": " + detail;
    return msg;
  }

  ParseErrorKind kind_;
  int line_;
};

/// Raised when a result contradicts something the dynamics guarantee
/// (period above two, a negative energy change, a broken edge identity).
/// Seeing one means there is a bug.
class InvariantViolation : public Error {
public:
  using Error::Error;
};

} // namespace krev
