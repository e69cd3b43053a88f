#pragma once

#include <stdexcept>
#include <string>

namespace residua {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed textual input (cycle notation, group files, formation names).
struct ParseError : Error {
  using Error::Error;
};

/// A configured size bound (group order cap, census cap) was exceeded.
struct CapError : Error {
  using Error::Error;
};

/// Precondition violation on otherwise well-formed inputs
/// (parent mismatch, index out of range, non-normal kernel, non-prime p).
struct DomainError : Error {
  using Error::Error;
};

}  // namespace residua
