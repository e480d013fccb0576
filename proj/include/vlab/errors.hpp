#pragma once

#include <stdexcept>
#include <string>

namespace vlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/// Malformed textual input. `position` is a 0-based character offset, or
/// a 1-based line number for file loaders.
class ParseError : public Error
{
public:
  ParseError(std::string const &what, std::size_t position)
  : Error(what + " (at " + std::to_string(position) + ")"),
    _position(position)
  {}

  std::size_t position() const
  { return _position; }

private:
  std::size_t _position;
};

/// A configured enumeration or search cap was hit.
class BudgetExceeded : public Error
{
public:
  using Error::Error;
};

/// A precondition on the arguments does not hold (degree mismatch,
/// element outside the ambient group, subgroup not normal, ...).
class InvalidArgument : public Error
{
public:
  using Error::Error;
};

/// The answer depends on facts the fixture database does not provide.
class Undecidable : public Error
{
public:
  using Error::Error;
};

} // namespace vlab
