#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace modmotif {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph, motif or set-system text. Carries the 1-based line.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// A precondition on an argument does not hold (wrong mode, empty set, ...).
class InputError : public Error {
 public:
  using Error::Error;
};

/// A candidate solution handed to a mapping or checker is not valid.
class InvalidSolution : public Error {
 public:
  using Error::Error;
};

/// An exhaustive oracle would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace modmotif
