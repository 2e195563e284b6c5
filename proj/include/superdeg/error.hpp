#pragma once

#include <stdexcept>
#include <string>

namespace superdeg {

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class UsageError : public Error {
public:
  using Error::Error;
};

class UnsupportedFamilyError : public Error {
public:
  using Error::Error;
};

class DegenerateFunctionalError : public Error {
public:
  using Error::Error;
};

class NotConvergedError : public Error {
public:
  NotConvergedError(const std::string &what, unsigned cap)
      : Error(what), degree_cap(cap) {}
  unsigned degree_cap;
};

class ParseError : public Error {
public:
  ParseError(const std::string &what, std::size_t line)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what),
        line(line) {}
  std::size_t line;
};

class InfeasibleError : public Error {
public:
  using Error::Error;
};

class UnboundedError : public Error {
public:
  using Error::Error;
};

class LabelingMismatchError : public Error {
public:
  using Error::Error;
};

/// Raised when an internal consistency check fails; indicates a bug or a
/// non-stabilized computation rather than bad input.
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace superdeg
