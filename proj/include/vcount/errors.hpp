#ifndef VCOUNT_ERRORS_HPP
#define VCOUNT_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vcount {

/// Base class for every error raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Two classes from different Chow contexts were combined.
struct ContextMismatch : Error {
  using Error::Error;
};

/// A top-degree monomial has no entry in an abstract integration table.
struct MissingTableEntry : Error {
  using Error::Error;
};

/// Multiplicative inverse requested for a class whose degree-0 part is not 1.
struct NotAUnit : Error {
  using Error::Error;
};

/// Operation requires a projective-space context.
struct WrongContextKind : Error {
  using Error::Error;
};

/// Class passed as a divisor has parts outside graded degree 1.
struct NotADivisorClass : Error {
  using Error::Error;
};

/// Abstract support used without an attached cotangent Chern polynomial.
struct MissingCotangentData : Error {
  using Error::Error;
};

/// Rank/dimension bookkeeping failed (support too big, wrong bundle rank).
struct DimensionMismatch : Error {
  using Error::Error;
};

struct UnitIdeal : Error {
  using Error::Error;
};

struct ZeroIdeal : Error {
  using Error::Error;
};

/// Malformed input text; carries 1-based line/column of the offence.
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t line_, std::size_t column_)
      : Error(what), line(line_), column(column_) {}
  std::size_t line = 0;
  std::size_t column = 0;
};

/// Structurally valid input with a missing or ill-typed field.
struct SchemaError : Error {
  SchemaError(const std::string& what, std::string field_)
      : Error(what), field(std::move(field_)) {}
  std::string field;
};

/// Well-formed input that breaks a documented invariant.
struct ValidationError : Error {
  using Error::Error;
};

}  // namespace vcount

#endif  // VCOUNT_ERRORS_HPP
