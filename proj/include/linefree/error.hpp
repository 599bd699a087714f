#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace linefree {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Two field elements from different quadratic fields were combined.
class UnsupportedField : public Error {
 public:
  using Error::Error;
};

class InvalidLine : public Error {
 public:
  using Error::Error;
};

class IdenticalLines : public Error {
 public:
  IdenticalLines() : Error("cannot intersect a line with itself") {}
};

class DuplicateLine : public Error {
 public:
  DuplicateLine(std::size_t first, std::size_t second)
      : Error("lines " + std::to_string(first) + " and " + std::to_string(second) +
              " coincide"),
        first_(first),
        second_(second) {}
  std::size_t first() const noexcept { return first_; }
  std::size_t second() const noexcept { return second_; }

 private:
  std::size_t first_;
  std::size_t second_;
};

/// A denominator (or the radicand) degenerates modulo the chosen prime.
class BadPrime : public Error {
 public:
  using Error::Error;
};

/// Modular data could not be turned into an exact certificate (unlucky
/// prime). Callers retry with another prime or fall back to exact elimination.
class LiftFailure : public Error {
 public:
  using Error::Error;
};

/// The Hilbert function of the Milnor algebra did not settle where expected.
class NotStabilized : public Error {
 public:
  NotStabilized(long first, long second)
      : Error("Hilbert function not stable: " + std::to_string(first) + " vs " +
              std::to_string(second)) {}
};

/// Two independent routes to the same verdict disagree. Always a bug.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ConsistencyError : public Error {
 public:
  ConsistencyError(std::string entry, const std::string& what)
      : Error("entry '" + entry + "': " + what), entry_(std::move(entry)) {}
  const std::string& entry() const noexcept { return entry_; }

 private:
  std::string entry_;
};

}  // namespace linefree
