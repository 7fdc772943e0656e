#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zetalab {

/// Base of every error raised by the library. The CLI maps any of these to
/// exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

/// An evaluation could not reach its accuracy target within the term budget.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

class NearZeroError : public Error {
 public:
  using Error::Error;
};

class MissedZeroError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class OrderError : public Error {
 public:
  OrderError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

/// A zero table does not reach the height a computation needs.
class CoverageError : public Error {
 public:
  using Error::Error;
};

class UnsupportedError : public Error {
 public:
  using Error::Error;
};

class OverflowError : public Error {
 public:
  using Error::Error;
};

class DivisionError : public Error {
 public:
  using Error::Error;
};

}  // namespace zetalab
