#pragma once

#include <stdexcept>
#include <string>

namespace kcut {

// Invalid argument or malformed value handed to the library.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Instance text that does not parse; carries the offending 1-based line.
class ParseError : public InputError {
 public:
  ParseError(int line, const std::string& message)
      : InputError("line " + std::to_string(line) + ": " + message), line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

// The exact oracle refused to enumerate: free-vertex budget exceeded.
class BudgetError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Tight-construction parameters violate a required inequality.
class ConstructionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace kcut
