#pragma once

// Exception hierarchy shared by the whole library.

#include <stdexcept>
#include <string>

namespace agc {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Type/rank combination outside the supported range.
struct RankError : Error {
  using Error::Error;
};

// Malformed expression text; `pos` is a 0-based offset into the input.
struct ParseError : Error {
  std::size_t pos;
  ParseError(const std::string& msg, std::size_t p)
      : Error(msg + " (at offset " + std::to_string(p) + ")"), pos(p) {}
};

// A minus sign or nonpositive constant appeared where only
// subtraction-free input is allowed.
struct NegativeNotAllowed : ParseError {
  using ParseError::ParseError;
};

struct MissingVariable : Error {
  std::string name;
  explicit MissingVariable(const std::string& n)
      : Error("missing variable: " + n), name(n) {}
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by zero during evaluation") {}
};

// Polynomial expansion exceeded the hard term cap.
struct ExpansionTooLarge : Error {
  std::size_t cap;
  explicit ExpansionTooLarge(std::size_t c)
      : Error("expansion exceeds " + std::to_string(c) + " terms"), cap(c) {}
};

struct IndexError : Error {
  using Error::Error;
};

}  // namespace agc
