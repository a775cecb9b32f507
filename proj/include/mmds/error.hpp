#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mmds {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed textual input (edge lists, DIMACS, vertex-set files).
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A file could not be opened or read.
class IoError : public Error {
 public:
  using Error::Error;
};

// Input violates a structural requirement of an algorithm (not a tree,
// not split, modulator invalid, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Exhaustive search refused because the instance is above a size cap.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace mmds
