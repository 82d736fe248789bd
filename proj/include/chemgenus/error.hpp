// Error type shared by all chemgenus modules.

#ifndef CHEMGENUS_ERROR_HPP_
#define CHEMGENUS_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace chemgenus {

enum class ErrorKind {
  UnknownElement,
  SyntaxError,
  DuplicateAtomLabel,
  DuplicateMolecule,
  MultipleUnknowns,
  NonMonotoneTime,
  InvalidMolecule,
  UnresolvedName,
  UnknownPresent,
  BondsUnknown,
  NoUnknown,
  NonIntegralDelta,
  NegativeDelta,
  ZeroDenominator,
  TOutOfRange,
  InvalidArgument,
  Io,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& msg)
    : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
      kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }
private:
  ErrorKind kind_;
};

// Parse failure with a 1-based source position (0 when not applicable).
class SyntaxError : public Error {
public:
  SyntaxError(const std::string& msg, int line, int column)
    : Error(ErrorKind::SyntaxError, position_prefix(line, column) + msg),
      line_(line), column_(column) {}
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }
private:
  static std::string position_prefix(int line, int column) {
    if (line <= 0)
      return {};
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": ";
  }
  int line_;
  int column_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

} // namespace chemgenus

#endif
