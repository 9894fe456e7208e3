#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ugb {

enum class Errc {
  RingMismatch,
  NotAUnit,
  InvalidArgument,
  EmptyWord,
  BasisViolation,
  ZeroPolynomial,
  AlgebraMismatch,
  OracleMismatch,
  NotUnital,
  BudgetExceeded,
  NotAGroebnerBasis,
  PreconditionViolated,
  NonUnitalRemainder,
  RoundsExceeded,
  InvalidLie,
  BoundTooSmall,
  UnsupportedRing,
  ParseError,
};

std::string_view to_string(Errc code);

/// All library failures are reported through this type; `code()` tells
/// callers which contract was violated.
class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& message);

  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

class ParseError : public Error {
public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  std::size_t line_;
  std::size_t column_;
};

} // namespace ugb
