#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace postlab
{

/// Base of every exception thrown by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Argument count does not match a table or gate arity.
class ArityError : public Error
{
public:
  using Error::Error;
};

/// An exhaustive scan or a closure computation would exceed its configured bound.
class LimitExceeded : public Error
{
public:
  using Error::Error;
};

/// A tractable-path algorithm was called on a circuit whose clone it does not cover.
class WrongClone : public Error
{
public:
  using Error::Error;
};

/// A function cannot be built from the requested base.
class NotInClone : public Error
{
public:
  using Error::Error;
};

/// Precondition on an argument violated (empty variable set, unknown variable, ...).
class InvalidArgument : public Error
{
public:
  using Error::Error;
};

enum class ParseErrorKind
{
  syntax,
  arity_mismatch,
  undeclared_identifier,
  forward_reference,
  duplicate_definition,
  missing_output
};

class ParseError : public Error
{
public:
  ParseError( ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& message )
      : Error( "line " + std::to_string( line ) + ", column " + std::to_string( column ) + ": " + message ),
        kind_( kind ), line_( line ), column_( column )
  {
  }

  ParseErrorKind kind() const noexcept { return kind_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

private:
  ParseErrorKind kind_;
  std::size_t line_;
  std::size_t column_;
};

} // namespace postlab
