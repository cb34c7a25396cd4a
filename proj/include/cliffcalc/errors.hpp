#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliffcalc {

// Expression text (or JSON input) rejected; offset is a 0-based byte position.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : std::runtime_error(message + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// |Det U| fell below the invertibility threshold.
class NotInvertibleError : public std::runtime_error {
 public:
  explicit NotInvertibleError(const std::string& message) : std::runtime_error(message) {}
};

// Operation asked for outside the dimensions it is defined for.
class UnsupportedDimensionError : public std::runtime_error {
 public:
  explicit UnsupportedDimensionError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace cliffcalc
