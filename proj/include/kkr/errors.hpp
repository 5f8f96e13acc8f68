#pragma once

#include <stdexcept>
#include <string>

namespace kkr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Tableaux or words over different alphabets were combined.
class AlphabetError : public Error {
  public:
    using Error::Error;
};

/// A rigged configuration (or other input) violates its defining constraints.
class ValidationError : public Error {
  public:
    using Error::Error;
};

/// Malformed text or JSON input.
class ParseError : public Error {
  public:
    using Error::Error;
};

/// A configured size cap (enumeration count, orbit size, padding) was hit.
class ResourceError : public Error {
  public:
    using Error::Error;
};

/// Caller broke an operation's precondition, e.g. phi on data that is not normal ordered.
class ContractError : public Error {
  public:
    using Error::Error;
};

/// An internal algorithm invariant failed. This indicates a bug, not bad input.
class InvariantError : public Error {
  public:
    using Error::Error;
};

} // namespace kkr
