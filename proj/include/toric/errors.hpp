#ifndef TORIC_ERRORS_HPP
#define TORIC_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace toric {

// A mathematical precondition failed: singular matrix, zero column, shared
// variables, cycle in the family graph, missing homogeneity, ...
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. `line` is 1-based; 0 when no single line applies.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error(line == 0 ? message
                                     : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace toric

#endif
