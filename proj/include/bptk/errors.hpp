#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace bptk {

// A letter outside the declared alphabet.
class AlphabetError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An argument outside an operation's domain (n = 0, log of zero, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Malformed text input. `line()` is 1-based, 0 when not line-oriented.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// A bistellar move whose link condition does not hold.
class InvalidMove : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace bptk
