#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace eriordan {

/// Raised when an exact-arithmetic precondition is violated
/// (division by zero, non-revertible series, invalid Riordan pair, ...).
class math_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Expression syntax error; `offset` is the byte offset into the source text.
class parse_error : public std::runtime_error {
 public:
  parse_error(std::size_t offset, const std::string& expected)
      : std::runtime_error("syntax error at offset " + std::to_string(offset) + ": expected " + expected),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace eriordan
