#ifndef LEFKIT_ERRORS_HPP
#define LEFKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace lefkit {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exponent vectors or ring contexts of different dimension were combined.
struct DimensionError : Error {
  using Error::Error;
};

/// Two values living in different polynomial rings were combined.
struct RingMismatchError : Error {
  using Error::Error;
};

/// A nonzero polynomial was required (leading term of zero, etc.).
struct ZeroPolynomialError : Error {
  using Error::Error;
};

/// A coordinate change with a singular matrix was requested.
struct SingularMatrixError : Error {
  using Error::Error;
};

/// An operation precondition was violated (index range, stability, ...).
struct PreconditionError : Error {
  using Error::Error;
};

/// An arrangement operation required a central arrangement.
struct CentralityError : Error {
  using Error::Error;
};

/// Random generation could not satisfy its constraints.
struct GenerationError : Error {
  using Error::Error;
};

/// Text input could not be parsed. Positions are 1-based.
struct ParseError : Error {
  ParseError(const std::string& msg, int line_, int col_)
      : Error(msg + " (line " + std::to_string(line_) + ", column " +
              std::to_string(col_) + ")"),
        line(line_),
        col(col_) {}
  int line;
  int col;
};

}  // namespace lefkit

#endif
