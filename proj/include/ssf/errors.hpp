#pragma once

#include <stdexcept>
#include <string>

namespace ssf {

// All library failures derive from Error so callers can map them to exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed group spec or malformed input file.
class ParseError : public Error {
 public:
  using Error::Error;
};

// A table or cocycle that fails a structural check (Latin square, associativity, ...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A configured size limit was exceeded.
class BoundError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace ssf
