#ifndef VRTREE_ERROR_HPP
#define VRTREE_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vrtree {

/// Bad input handed to a public entry point (out-of-range vertex, self-loop,
/// probability outside [0,1], mismatched simplex dimensions, ...).
class validation_error : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A simplex tree operation that would break the tree's ordering or
/// uniqueness invariants. Seeing one of these means a construction is buggy.
class structural_error : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// A construction exceeded its node budget.
class resource_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. Carries the 1-based line number.
class parse_error : public std::runtime_error {
public:
  parse_error(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

} // namespace vrtree

#endif
