#pragma once

#include <stdexcept>
#include <string>

namespace geoprove {

// Domain violations inside the algebra layer: mismatched variable tables,
// exact division that does not come out even, canonicalizing zero, ...
class MathError : public std::runtime_error {
 public:
  explicit MathError(const std::string& what) : std::runtime_error(what) {}
};

// Source-level diagnostic with a position in the input text.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, int line, int col)
      : std::runtime_error(message + " (line " + std::to_string(line) +
                           ", col " + std::to_string(col) + ")"),
        line_(line), col_(col), message_(message) {}

  int line() const noexcept { return line_; }
  int col() const noexcept { return col_; }
  const std::string& message() const noexcept { return message_; }

 private:
  int line_;
  int col_;
  std::string message_;
};

// A construction that is degenerate for every parameter value, or a
// program-level precondition failure (e.g. a hypothesis case whose
// polynomial is identically zero).
class CompileError : public std::runtime_error {
 public:
  explicit CompileError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace geoprove
