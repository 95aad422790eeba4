#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dotscape {

// Unreadable or unwritable files.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input data. line() is 1-based, 0 when not tied to a line.
class parse_error : public std::runtime_error {
 public:
  parse_error(const std::string& what, std::size_t line = 0)
      : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Empty clouds and other inputs that cannot form a point cloud.
class ingestion_error : public parse_error {
 public:
  using parse_error::parse_error;
};

// Filtration violates face-before-coface ordering or references missing faces.
class structure_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Out-of-range or otherwise invalid parameters (radii, counts, resolutions).
class invalid_parameter : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Query radius outside the range a barcode was computed for.
class range_error : public invalid_parameter {
 public:
  using invalid_parameter::invalid_parameter;
};

}  // namespace dotscape
