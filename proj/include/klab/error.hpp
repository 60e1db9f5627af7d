#pragma once

#include <stdexcept>
#include <string>

namespace klab {

// Violated precondition, malformed input, or out-of-range parameter.
// The CLI maps this to exit code 1 with a structured error report.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Text that does not conform to the word grammar. Carries the byte offset
// of the offending token.
class parse_error : public domain_error {
 public:
  parse_error(const std::string& what, std::size_t position)
      : domain_error(what + " (at position " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace klab
