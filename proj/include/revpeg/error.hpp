#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace revpeg {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class IllegalMove : public Error {
 public:
  using Error::Error;
};

/// Raised by replay; index is the position of the first illegal move.
class IllegalMoveAt : public Error {
 public:
  IllegalMoveAt(std::size_t index, const std::string& what)
      : Error("illegal move at index " + std::to_string(index) + ": " + what), index_(index) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class CapacityExceeded : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraph : public Error {
 public:
  DisconnectedGraph() : Error("graph is not connected") {}
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class PatternMismatch : public Error {
 public:
  using Error::Error;
};

class NotSameClass : public Error {
 public:
  using Error::Error;
};

class InvariantViolation : public Error {
 public:
  using Error::Error;
};

class NotSolvableStart : public Error {
 public:
  using Error::Error;
};

class NotDoublyFree : public Error {
 public:
  using Error::Error;
};

class TargetUnreachable : public Error {
 public:
  using Error::Error;
};

class IllDefined : public Error {
 public:
  using Error::Error;
};

class NotFound : public Error {
 public:
  using Error::Error;
};

}  // namespace revpeg
