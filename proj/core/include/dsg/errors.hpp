#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dsg {

// Malformed ring file or polynomial text. `position` is a byte offset into
// the text being parsed (or a line number for ring files, see RingFileError).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what), position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

// Mathematically ill-posed request: zero denominator, h out of range,
// mismatched rings, unit ideal where a proper ideal is required.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside what the algorithms support (non-homogeneous input to a
// graded algorithm, non-artinian quotient for Loewy length, no strategy).
class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A configured resource ceiling was hit. Never accompanied by a result.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dsg
