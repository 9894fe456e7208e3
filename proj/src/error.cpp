#include "ugb/error.hpp"

namespace ugb {

std::string_view to_string(Errc code) {
  switch (code) {
  case Errc::RingMismatch: return "RingMismatch";
  case Errc::NotAUnit: return "NotAUnit";
  case Errc::InvalidArgument: return "InvalidArgument";
  case Errc::EmptyWord: return "EmptyWord";
  case Errc::BasisViolation: return "BasisViolation";
  case Errc::ZeroPolynomial: return "ZeroPolynomial";
  case Errc::AlgebraMismatch: return "AlgebraMismatch";
  case Errc::OracleMismatch: return "OracleMismatch";
  case Errc::NotUnital: return "NotUnital";
  case Errc::BudgetExceeded: return "BudgetExceeded";
  case Errc::NotAGroebnerBasis: return "NotAGroebnerBasis";
  case Errc::PreconditionViolated: return "PreconditionViolated";
  case Errc::NonUnitalRemainder: return "NonUnitalRemainder";
  case Errc::RoundsExceeded: return "RoundsExceeded";
  case Errc::InvalidLie: return "InvalidLie";
  case Errc::BoundTooSmall: return "BoundTooSmall";
  case Errc::UnsupportedRing: return "UnsupportedRing";
  case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : Error(Errc::ParseError,
            "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
      line_(line), column_(column) {}

} // namespace ugb
